use modxi::C64;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseComplexError(pub String);

impl fmt::Display for ParseComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse '{}' as a complex number (expected a, a+bi or a-bi)", self.0)
    }
}

impl std::error::Error for ParseComplexError {}

/// Parses "a", "a+bi", "a-bi", "bi" and "i"-suffixed forms such as "1e-4-2.5e-3i".
pub fn parse_complex(s: &str) -> Result<C64, ParseComplexError> {
    let err = || ParseComplexError(s.to_string());
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(err());
    }
    let num = |p: &str| -> Result<f64, ParseComplexError> {
        match p {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => p.parse::<f64>().map_err(|_| err()).and_then(|v| if v.is_finite() { Ok(v) } else { Err(err()) }),
        }
    };
    let Some(body) = t.strip_suffix('i') else {
        return Ok(C64::new(num_strict(&t).ok_or_else(err)?, 0.0));
    };
    // split before the last sign that does not belong to an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => Ok(C64::new(num_strict(&body[..k]).ok_or_else(err)?, num(&body[k..])?)),
        None => Ok(C64::new(0.0, num(body)?)),
    }
}

fn num_strict(p: &str) -> Option<f64> {
    p.parse::<f64>().ok().filter(|v| v.is_finite())
}

pub fn format_complex(z: C64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        assert_eq!(parse_complex("0.3").unwrap(), C64::new(0.3, 0.0));
        assert_eq!(parse_complex("0.3+0.1i").unwrap(), C64::new(0.3, 0.1));
        assert_eq!(parse_complex("-0.3-0.1i").unwrap(), C64::new(-0.3, -0.1));
        assert_eq!(parse_complex("2i").unwrap(), C64::new(0.0, 2.0));
        assert_eq!(parse_complex("-i").unwrap(), C64::new(0.0, -1.0));
        assert_eq!(parse_complex("1+i").unwrap(), C64::new(1.0, 1.0));
        assert_eq!(parse_complex("1e-4-2.5e-3i").unwrap(), C64::new(1e-4, -2.5e-3));
        assert_eq!(parse_complex("-1e-4").unwrap(), C64::new(-1e-4, 0.0));
        for bad in ["", "x", "1+", "1++2i", "nan", "1+2j", "i1"] {
            assert!(parse_complex(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn round_trip() {
        for z in [C64::new(0.3, 0.0), C64::new(-0.25, 0.5), C64::new(1e-4, -3e-7)] {
            assert_eq!(parse_complex(&format_complex(z)).unwrap(), z);
        }
    }
}
