use belyi_core::belyi::{main_equation_residual, verify_belyi, FactoredBelyi};
use belyi_core::compose::{beta12_map, build_beta60, Preset};
use belyi_core::derive::{derive_case, CaseArtifacts, DeriveConfig};
use belyi_core::{GaussRat, UniPoly};

fn factor(fs: &[belyi_core::belyi::Factor], exp: u32) -> UniPoly {
    fs.iter().find(|f| f.exp == exp).map(|f| f.poly.clone()).unwrap_or_else(UniPoly::one)
}

/// `V`, `P`, `H`, `M` read off a factored fullerene Belyi function.
fn vphm(f: &FactoredBelyi) -> (UniPoly, UniPoly, UniPoly, UniPoly) {
    (factor(&f.zeros, 3), factor(&f.poles, 5), factor(&f.poles, 6), factor(&f.ones, 2))
}

#[test]
fn every_preset_verifies_and_round_trips() {
    for p in Preset::ALL {
        let f = p.build().unwrap();
        let pp = verify_belyi(&f).unwrap();
        let back = FactoredBelyi::from_json(&f.to_json()).unwrap();
        assert_eq!(back, f, "{p}");
        assert_eq!(verify_belyi(&back).unwrap(), pp);
    }
}

#[test]
fn dodecahedron_main_equation_agrees_with_derivation() {
    let f = Preset::D60.build().unwrap();
    let (v, p, h, m) = vphm(&f);
    assert!(h.is_constant());
    assert!(main_equation_residual(&f.k, &v, &p, &h, &m).is_zero());

    let report = derive_case(5, &DeriveConfig::default()).unwrap();
    let Some(CaseArtifacts::Solution { p: dp, v: dv, m: dm, k, .. }) = report.artifacts else {
        panic!("s = 5 has a solution");
    };
    assert_eq!((dp, dv, dm), (p, v, m));
    assert_eq!(k, GaussRat::from_int(1728));
    assert_eq!(f.k, GaussRat::from_frac(1, 1728));
}

#[test]
fn barrel_main_equation_with_h_equal_z() {
    let f = Preset::D72.build().unwrap();
    let (v, p, h, m) = vphm(&f);
    assert_eq!(h, UniPoly::z());
    assert_eq!(v, UniPoly::from_ints(&[1, -228, 494, 228, 1]).substitute_power(6));
    assert_eq!((v.degree(), p.degree(), m.degree()), (Some(24), Some(12), Some(36)));
    assert!(main_equation_residual(&f.k, &v, &p, &h, &m).is_zero());
    let wrong_h = UniPoly::from_ints(&[1, 1]);
    assert!(!main_equation_residual(&f.k, &v, &p, &wrong_h, &m).is_zero());
}

#[test]
fn beta60_is_beta12_of_z5() {
    let b12 = beta12_map().unwrap();
    assert_eq!(build_beta60().unwrap().to_rational_map(), b12.substitute_power(5));
}
