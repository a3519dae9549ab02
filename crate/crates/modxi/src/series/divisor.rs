use super::SeriesError;
use crate::numerics::C64;
use std::sync::OnceLock;

pub const DEFAULT_LIMIT: usize = 1_000_000;

/// Smallest-prime-factor sieve with divisor counts.
#[derive(Debug, Clone)]
pub struct DivisorTable {
    limit: usize,
    d: Vec<u16>,
    spf: Vec<u32>,
}

impl DivisorTable {
    pub fn new(limit: usize) -> Self {
        let limit = limit.max(2);
        let mut spf = vec![0u32; limit + 1];
        let mut primes: Vec<u32> = Vec::new();
        for i in 2..=limit {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            let si = spf[i];
            for &p in &primes {
                let m = i * p as usize;
                if p > si || m > limit {
                    break;
                }
                spf[m] = p;
            }
        }
        let mut d = vec![0u16; limit + 1];
        if limit >= 1 {
            d[1] = 1;
        }
        // d(n) from d(n / p^e) where p = spf(n)
        for n in 2..=limit {
            let p = spf[n] as usize;
            let mut m = n;
            let mut e = 0u16;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            d[n] = d[m] * (e + 1);
        }
        DivisorTable { limit, d, spf }
    }

    pub fn global() -> &'static DivisorTable {
        static T: OnceLock<DivisorTable> = OnceLock::new();
        T.get_or_init(|| DivisorTable::new(DEFAULT_LIMIT))
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    fn check(&self, n: usize) -> Result<(), SeriesError> {
        if n == 0 || n > self.limit {
            Err(SeriesError::OutOfTable { n, limit: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn d(&self, n: usize) -> Result<u64, SeriesError> {
        self.check(n)?;
        Ok(self.d[n] as u64)
    }

    /// Prime factorization as (p, e) pairs in increasing p.
    pub fn factorize(&self, n: usize) -> Result<Vec<(u64, u32)>, SeriesError> {
        self.check(n)?;
        let mut out = Vec::new();
        let mut m = n;
        while m > 1 {
            let p = self.spf[m] as usize;
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p as u64, e));
        }
        Ok(out)
    }

    /// σ_s(n) = Σ_{d|n} d^s, evaluated multiplicatively.
    pub fn sigma(&self, s: C64, n: usize) -> Result<C64, SeriesError> {
        self.check(n)?;
        Ok(self.sigma_unchecked(s, n))
    }

    pub(crate) fn sigma_unchecked(&self, s: C64, n: usize) -> C64 {
        let mut prod = C64::new(1.0, 0.0);
        let mut m = n;
        while m > 1 {
            let p = self.spf[m] as usize;
            let ps = (s * (p as f64).ln()).exp();
            let mut acc = C64::new(1.0, 0.0);
            let mut pw = C64::new(1.0, 0.0);
            while m % p == 0 {
                m /= p;
                pw *= ps;
                acc += pw;
            }
            prod *= acc;
        }
        prod
    }

    pub(crate) fn d_unchecked(&self, n: usize) -> f64 {
        self.d[n] as f64
    }
}

/// d(n) from the global table.
pub fn divisor_d(n: usize) -> Result<u64, SeriesError> {
    DivisorTable::global().d(n)
}

/// σ_{s}(n) from the global table; σ_{−z} is `divisor_sigma(-z, n)`.
pub fn divisor_sigma(s: C64, n: usize) -> Result<C64, SeriesError> {
    DivisorTable::global().sigma(s, n)
}

/// σ_{−z}(n) n^{z/2} = Σ_{ab=n} (b/a)^{z/2}, even in z.
pub(crate) fn sigma_sym(z: C64, n: usize) -> C64 {
    let t = DivisorTable::global();
    t.sigma_unchecked(-z, n) * (z * (0.5 * (n as f64).ln())).exp()
}
