use super::*;

#[test]
fn names_round_trip() {
    for id in IdentityId::ALL {
        assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
        assert_eq!(id.name().to_lowercase().parse::<IdentityId>().unwrap(), id);
    }
    assert!("NOPE".parse::<IdentityId>().is_err());
    assert_eq!(list_identities().len(), 24);
}

#[test]
fn serde_uses_registry_names() {
    for id in IdentityId::ALL {
        assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{}\"", id.name()));
    }
}

#[test]
fn guinand_at_zero_is_rejected() {
    let e = run_check(IdentityId::Guinand, &CheckParams::new(1.2, C64::new(0.0, 0.0))).unwrap_err();
    assert!(e.to_string().contains("KOSH_K0"), "{e}");
}

#[test]
fn zero_forms_reject_nonzero_z() {
    for id in [IdentityId::PhiZ0, IdentityId::FerrarZ0, IdentityId::KoshK0] {
        assert!(run_check(id, &CheckParams::new(1.2, C64::new(0.2, 0.0))).is_err());
    }
    assert!(run_check(IdentityId::Voronoi, &CheckParams::new(2.0, C64::new(0.0, 0.0))).is_err());
    assert!(run_check(IdentityId::Jacobi, &CheckParams::new(-1.0, C64::new(0.0, 0.0))).is_err());
}

#[test]
fn cheap_defaults_pass() {
    for id in [
        IdentityId::Jacobi,
        IdentityId::KoshK0,
        IdentityId::Guinand,
        IdentityId::Voronoi,
        IdentityId::CohenK1,
        IdentityId::OmegaProp,
        IdentityId::HardyPsi,
    ] {
        let r = run_check(id, &CheckParams::defaults_for(id)).unwrap();
        eprintln!("{id}: {:e} {:?}", r.max_abs_diff, r.members);
        assert!(r.pass && r.converged, "{r:?}");
    }
}

#[test]
fn omega_prop_has_four_members_for_positive_z() {
    let r = run_check(IdentityId::OmegaProp, &CheckParams::new(0.7, C64::new(0.3, 0.0))).unwrap();
    assert_eq!(r.members.len(), 4);
    let r = run_check(IdentityId::OmegaProp, &CheckParams::new(0.7, C64::new(0.0, 0.0))).unwrap();
    assert_eq!(r.members.len(), 3);
    assert!(r.pass, "{r:?}");
}

#[test]
fn agreement_respects_groups() {
    let m = |l: &str, v: f64| Member { label: l.into(), value: C64::new(v, 0.0), err: 0.0 };
    let ms = vec![m("a/x", 1.0), m("a/y", 1.0), m("b/x", 5.0), m("b/y", 5.0 + 1e-9)];
    let (d, _, pass) = agreement(&ms, 1e-10, &|_| 1.0);
    assert!((d - 1e-9).abs() < 1e-15 && !pass);
    let (_, _, pass) = agreement(&ms, 1e-10, &|g| if g == "b" { 100.0 } else { 1.0 });
    assert!(pass);
}
