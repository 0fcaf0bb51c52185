//! Static SVG pictures of planar orthant polyhedra: the bounded complement
//! `C ∖ B` shaded, the boundary of `B` stroked, generators dotted and
//! labelled, over the lattice grid. Output depends only on the input.

use std::fmt::Write as _;

use num_traits::ToPrimitive;
use relmix::orthant::OrthantPolyhedron;

const UNIT: i64 = 48;
const PAD: i64 = 36;
const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

fn xy(p: &[i64]) -> (i64, i64) {
    (p[0], p[1])
}

pub fn render(shapes: &[OrthantPolyhedron]) -> String {
    let extent = shapes
        .iter()
        .map(|b| b.max_coordinate_sum().to_i64().expect("small coordinates"))
        .max()
        .unwrap_or(0)
        + 1;
    let side = extent * UNIT + 2 * PAD;
    let px = |x: i64| PAD + x * UNIT;
    let py = |y: i64| side - PAD - y * UNIT;

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" viewBox="0 0 {side} {side}">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="{side}" height="{side}" fill="white"/>"#).unwrap();

    writeln!(s, r##"<g stroke="#dddddd" stroke-width="1">"##).unwrap();
    for k in 0..=extent {
        writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, px(k), py(0), px(k), py(extent)).unwrap();
        writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, px(0), py(k), px(extent), py(k)).unwrap();
    }
    writeln!(s, "</g>").unwrap();

    for (k, b) in shapes.iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        // Generators in decreasing lexicographic order run along the boundary
        // from the first axis to the second.
        let chain: Vec<(i64, i64)> = b.generators().iter().rev().map(|g| xy(&g.to_i64s())).collect();
        let mut region = vec![format!("{},{}", px(0), py(0))];
        region.extend(chain.iter().map(|&(x, y)| format!("{},{}", px(x), py(y))));
        writeln!(
            s,
            r#"<polygon points="{}" fill="{color}" fill-opacity="0.25" stroke="none"/>"#,
            region.join(" ")
        )
        .unwrap();

        let (first, last) = (chain[0], chain[chain.len() - 1]);
        let mut boundary = vec![format!("{},{}", px(extent), py(first.1))];
        boundary.extend(chain.iter().map(|&(x, y)| format!("{},{}", px(x), py(y))));
        boundary.push(format!("{},{}", px(last.0), py(extent)));
        writeln!(
            s,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="2"/>"#,
            boundary.join(" ")
        )
        .unwrap();

        for &(x, y) in &chain {
            writeln!(s, r#"<circle cx="{}" cy="{}" r="4" fill="{color}"/>"#, px(x), py(y)).unwrap();
            writeln!(
                s,
                r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12" fill="{color}">({x},{y})</text>"#,
                px(x) + 6,
                py(y) - 6 - 14 * k as i64
            )
            .unwrap();
        }
    }

    writeln!(s, r##"<g stroke="#000000" stroke-width="1.5">"##).unwrap();
    writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, px(0), py(0), px(extent), py(0)).unwrap();
    writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, px(0), py(0), px(0), py(extent)).unwrap();
    writeln!(s, "</g>").unwrap();
    s.push_str("</svg>\n");
    s
}
