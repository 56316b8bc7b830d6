//! Spot values of the integral bounds against closed forms evaluated in
//! 40-digit arithmetic (Euler's integral for the hypergeometric function),
//! and the normalizer against direct composite quadrature.
#![allow(clippy::excessive_precision)]

use hyperind::bounds::{beta_normalizer, chishti, chishti_rhs, li_zang, shearer_s1, DEFAULT_TOL};
use hyperind::generators::loose_path;

const BETA: [(usize, u32, f64); 15] = [
    (2, 1, 1.0),
    (2, 2, 2.0),
    (2, 3, 3.0),
    (3, 1, 5.2441151085842396),
    (3, 2, 9.308740569746155),
    (3, 3, 13.332951623798487),
    (4, 1, 11.456586824501692),
    (4, 2, 20.503648546552536),
    (4, 3, 29.520218754052485),
    (5, 1, 19.583841375673363),
    (5, 2, 35.616253680277299),
    (5, 3, 51.627400575699385),
    (6, 1, 29.664850281758296),
    (6, 2, 54.687981450408038),
    (6, 3, 79.695848079253106),
];

#[test]
fn normalizer_matches_high_precision() {
    for (r, m, want) in BETA {
        let got = beta_normalizer(r, m).unwrap();
        assert!((got - want).abs() <= 1e-12 * want, "B({r},{m}) = {got}, want {want}");
    }
}

#[test]
fn li_zang_spot_values() {
    for (r, m, x, want) in [
        (3, 1, 5.0, 0.19636583421971396),
        (3, 2, 5.0, 0.14774763659246483),
        (5, 3, 7.5, 0.063753146497551447),
        (4, 2, 0.5, 0.1935030357095878),
        (2, 1, 10.0, 0.17315865345605502),
    ] {
        let e = li_zang(r, m, x, DEFAULT_TOL).unwrap();
        assert!((e.value - want).abs() <= 1e-9, "li_zang({r},{m},{x}) = {}, want {want}", e.value);
        assert!(e.error <= DEFAULT_TOL);
    }
}

#[test]
fn chishti_spot_values() {
    for (r, x, want) in [
        (3, 10.0, 0.27224112480112034),
        (5, 2.5, 0.56209576347655244),
        (3, 1.2, 0.5449297047153746),
        (6, 40.0, 0.36642203714412827),
    ] {
        let v = chishti(r, x, DEFAULT_TOL).unwrap().value;
        assert!((v - want).abs() <= 1e-9, "chishti({r},{x}) = {v}, want {want}");
    }
    let rhs = chishti_rhs(&loose_path(2, 3).unwrap(), 3, DEFAULT_TOL).unwrap();
    assert!((rhs.value - 2.724648523576873).abs() <= 1e-8);
}

#[test]
fn graph_bound_spot_values() {
    for (x, want) in [(0.5, 0.61370563888010938), (2.0, 0.38629436111989062), (5.0, 0.25294934763565637), (40.0, 0.071370925814962164)] {
        assert!((shearer_s1(x).unwrap() - want).abs() <= 1e-14);
    }
}
