//! Shared fixtures for the benchmark targets.

use grplane_core::bundle::Presentation;
use grplane_core::parse::parse_poly;
use grplane_core::plucker::{plucker_map, PluckerMap, SectionQuadruple};
use grplane_core::poly::Ring;
use grplane_core::rat::{int, Rat};

/// The canonical presentation (x, y, z^2).
pub fn presentation_xyz2() -> Presentation {
    let r = Ring::new(vec!["x", "y", "z"]);
    Presentation::new(
        parse_poly("x", &r).unwrap(),
        parse_poly("y", &r).unwrap(),
        parse_poly("z^2", &r).unwrap(),
    )
    .unwrap()
}

/// The degree-4 worked example: sections w1, w2, w3, w4 - w5.
pub fn example2_map() -> PluckerMap {
    let p = presentation_xyz2();
    let row = |v: [i64; 5]| -> [Rat; 5] { v.map(int) };
    let coords = [
        row([1, 0, 0, 0, 0]),
        row([0, 1, 0, 0, 0]),
        row([0, 0, 1, 0, 0]),
        row([0, 0, 0, 1, -1]),
    ];
    let quad = SectionQuadruple::from_coords(&p, &coords).unwrap();
    plucker_map(&quad, &p).unwrap()
}
