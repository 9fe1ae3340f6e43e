//! Whole `render` pipeline on an arbitrary turns file.

#![no_main]

use dragoncurve::geometry::{bounding_box, curve_to_path, Heading, Point};
use dragoncurve::render::{path_to_svg, RenderOptions};
use dragoncurve::Curve;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(curve) = String::from_utf8_lossy(data).parse::<Curve>() else {
        return;
    };
    let path = curve_to_path(&curve, Point::ORIGIN, Heading::East);
    assert_eq!(path.len(), curve.len() + 2);
    bounding_box(&path).unwrap();
    let svg = path_to_svg(&path, &RenderOptions::default()).unwrap();
    assert!(svg.ends_with("</svg>\n"));
});
