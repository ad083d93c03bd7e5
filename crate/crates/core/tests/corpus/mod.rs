//! Shared test corpus: the named curve germs and a battery of
//! zero-dimensional ideals covering every local colength the headline
//! computations produce.

use curvesing::ideal::Ideal;
use curvesing::invariants::CurveGerm;
use curvesing::poly::{parse_poly, Ring};

pub fn ideal(vars: &[&str], gens: &[&str]) -> Ideal {
    let ring = Ring::new(vars.to_vec());
    Ideal::new(
        ring.clone(),
        gens.iter().map(|s| parse_poly(s, &ring).unwrap()).collect(),
    )
}

pub fn germ(vars: &[&str], eqs: &[&str]) -> CurveGerm {
    let ring = Ring::new(vars.to_vec());
    let equations = eqs.iter().map(|s| parse_poly(s, &ring).unwrap()).collect();
    CurveGerm::new(ring, equations).unwrap()
}

pub fn three_lines() -> CurveGerm {
    germ(&["x", "y", "z"], &["x*y", "y*z", "x*z"])
}

pub fn curve_345() -> CurveGerm {
    germ(&["x", "y", "z"], &["x^2*y - z^2", "x^3 - y*z", "y^2 - x*z"])
}

pub fn cusp() -> CurveGerm {
    germ(&["x", "y"], &["y^2 - x^3"])
}

pub fn smooth_line() -> CurveGerm {
    germ(&["x", "y"], &["y"])
}

/// Zero-dimensional ideals with finite colength at the origin, at least 20 of
/// them, including all the local colengths behind the headline numbers.
pub fn zero_dimensional_corpus() -> Vec<Ideal> {
    vec![
        ideal(&["x", "y"], &["x", "y"]),
        ideal(&["x", "y"], &["x^2", "y"]),
        ideal(&["x", "y"], &["x^2", "y^3"]),
        ideal(&["x", "y"], &["x^3", "x*y", "y^2"]),
        ideal(&["x", "y", "z"], &["x", "y", "z"]),
        ideal(&["x", "y", "z"], &["x^2", "y^2", "z^2"]),
        ideal(&["x", "y", "z"], &["x^2", "y^3", "z^4"]),
        ideal(&["x", "y"], &["x^2 + y^3", "x*y"]),
        ideal(&["x", "y"], &["y^2 - x^3", "x^2"]),
        ideal(&["x", "y"], &["y^2 - x^3", "x*y", "x^3"]),
        ideal(&["x", "y"], &["x^2 - y^2", "x*y"]),
        ideal(&["x", "y"], &["x + y^2", "y^4"]),
        // multiplicity sections
        ideal(&["x", "y", "z"], &["x*y", "y*z", "x*z", "x + 2*y + 3*z"]),
        ideal(
            &["x", "y", "z"],
            &["x^2*y - z^2", "x^3 - y*z", "y^2 - x*z", "x + 2*y + 3*z"],
        ),
        ideal(&["x", "y"], &["y^2 - x^3", "x + 5*y"]),
        // polar sections e(Jac)
        ideal(&["x", "y", "z"], &["x*y", "y*z", "x*z", "x^2 + y^2 + z^2"]),
        ideal(&["x", "y"], &["y^2 - x^3", "3*x^2 + 2*y"]),
        // discrepancy sections i0
        ideal(&["x", "y", "z"], &["x*y", "y*z", "x*z", "x - y", "y + z"]),
        ideal(
            &["x", "y", "z"],
            &[
                "x^2*y - z^2",
                "x^3 - y*z",
                "y^2 - x*z",
                "x + y + z",
                "y + z + x^2",
            ],
        ),
        ideal(
            &["x", "y", "z"],
            &["x^2*y - z^2", "x^3 - y*z", "y^2 - x*z", "y", "z"],
        ),
        // smooth and near-smooth cases
        ideal(&["x", "y"], &["y", "x"]),
        ideal(&["x", "y"], &["y - x^2", "x^3"]),
        ideal(&["x", "y", "z"], &["z - x*y", "y - x^2", "x^4"]),
    ]
}
