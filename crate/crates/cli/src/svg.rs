//! Polar plot of a range contour.

use std::fmt::Write;

const SIZE: f64 = 600.0;
const MARGIN: f64 = 40.0;

/// Renders `ranges[i]` (meters at bearing `i` degrees) as a closed polar
/// path, with a dashed reference circle at `reference_range`.
pub fn polar_contour(ranges: &[f64], reference_range: f64) -> String {
    let c = SIZE / 2.0;
    let max = ranges.iter().copied().fold(reference_range, f64::max);
    let scale = (c - MARGIN) / max;
    let step = 360.0 / ranges.len() as f64;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r##"<g stroke="#bbbbbb" stroke-width="1"><line x1="{m}" y1="{c}" x2="{e}" y2="{c}"/><line x1="{c}" y1="{m}" x2="{c}" y2="{e}"/></g>"##,
        m = MARGIN / 2.0,
        e = SIZE - MARGIN / 2.0,
    );
    let _ = writeln!(
        s,
        r##"<circle cx="{c}" cy="{c}" r="{:.3}" fill="none" stroke="#888888" stroke-dasharray="4 4"/>"##,
        reference_range * scale
    );

    s.push_str(r#"<path d=""#);
    for (i, r) in ranges.iter().enumerate() {
        let (sin, cos) = libm::sincos((i as f64 * step).to_radians());
        // SVG y grows downward
        let x = c + r * scale * cos;
        let y = c - r * scale * sin;
        let _ = write!(s, "{}{:.3},{:.3} ", if i == 0 { 'M' } else { 'L' }, x, y);
    }
    s.push_str(r##"Z" fill="none" stroke="#c0392b" stroke-width="1.5"/>"##);
    s.push('\n');

    for (deg, anchor, dx, dy) in [
        (0, "start", 4.0, -4.0),
        (90, "middle", 0.0, -4.0),
        (180, "end", -4.0, -4.0),
        (270, "middle", 0.0, 14.0),
    ] {
        let (sin, cos) = libm::sincos(f64::from(deg).to_radians());
        let x = c + (c - MARGIN / 2.0) * cos + dx;
        let y = c - (c - MARGIN / 2.0) * sin + dy;
        let _ = writeln!(
            s,
            r#"<text x="{x:.3}" y="{y:.3}" font-family="sans-serif" font-size="12" text-anchor="{anchor}">{deg}&#176;</text>"#
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{MARGIN}" y="{:.3}" font-family="sans-serif" font-size="12">reference circle: {:.2} m</text>"#,
        SIZE - 8.0,
        reference_range
    );
    s.push_str("</svg>\n");
    s
}
