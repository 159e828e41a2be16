//! Self-contained SVG rendering of a similarity curve.
//!
//! Follows the figure convention of the experiments: the x axis is the word
//! offset, the curve carries one point per paragraph boundary, full-height
//! vertical bars mark the chosen fragment boundaries and short ticks below
//! the axis mark every paragraph boundary.

use std::fmt::Write as _;

const WIDTH: f64 = 900.0;
const HEIGHT: f64 = 320.0;
const LEFT: f64 = 50.0;
const RIGHT: f64 = 880.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 280.0;

/// Render the curve as a deterministic standalone SVG document.
///
/// `curve` holds `sim[1..n-1]`, `boundaries` the chosen subset of `1..n-1`,
/// `lengths` the n paragraph word counts used to place boundaries at word
/// offsets.
pub fn render_curve_svg(curve: &[f64], boundaries: &[usize], lengths: &[u64], title: &str) -> String {
    let total: u64 = lengths.iter().sum();
    let offsets: Vec<u64> = lengths
        .iter()
        .take(curve.len())
        .scan(0u64, |acc, &len| {
            *acc += len;
            Some(*acc)
        })
        .collect();
    let x = |offset: u64| LEFT + (RIGHT - LEFT) * offset as f64 / total.max(1) as f64;
    let y = |sim: f64| BOTTOM - (BOTTOM - TOP) * sim.clamp(0.0, 1.0);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(svg, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{LEFT}" y="20" font-family="monospace" font-size="13">{}</text>"#,
        escape(title)
    );

    // axes and y grid
    let _ = writeln!(
        svg,
        r#"<line x1="{LEFT}" y1="{BOTTOM}" x2="{RIGHT}" y2="{BOTTOM}" stroke="black" stroke-width="1"/>"#
    );
    let _ = writeln!(
        svg,
        r#"<line x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{BOTTOM}" stroke="black" stroke-width="1"/>"#
    );
    for tick in [0.0f64, 0.5, 1.0] {
        let ty = y(tick);
        let _ = writeln!(
            svg,
            r#"<line x1="{:.2}" y1="{ty:.2}" x2="{RIGHT}" y2="{ty:.2}" stroke="lightgray" stroke-width="0.5"/>"#,
            LEFT
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="11" text-anchor="end">{tick:.1}</text>"#,
            LEFT - 6.0,
            ty + 4.0
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{RIGHT}" y="{:.2}" font-family="monospace" font-size="11" text-anchor="end">{total} words</text>"#,
        BOTTOM + 26.0
    );

    // paragraph boundary ticks below the axis
    for &offset in &offsets {
        let tx = x(offset);
        let _ = writeln!(
            svg,
            r#"<line x1="{tx:.2}" y1="{BOTTOM}" x2="{tx:.2}" y2="{:.2}" stroke="black" stroke-width="1"/>"#,
            BOTTOM + 8.0
        );
    }

    // chosen fragment boundaries: full-height bars
    for &b in boundaries {
        let tx = x(offsets[b - 1]);
        let _ = writeln!(
            svg,
            r#"<line x1="{tx:.2}" y1="{TOP}" x2="{tx:.2}" y2="{BOTTOM}" stroke="black" stroke-width="1.5"/>"#
        );
    }

    // similarity polyline, one point per boundary
    if !curve.is_empty() {
        let points: Vec<String> = curve
            .iter()
            .zip(&offsets)
            .map(|(&sim, &offset)| format!("{:.2},{:.2}", x(offset), y(sim)))
            .collect();
        let _ = writeln!(
            svg,
            r#"<polyline points="{}" fill="none" stroke="steelblue" stroke-width="1.5"/>"#,
            points.join(" ")
        );
    }

    svg.push_str("</svg>\n");
    svg
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_boundary_set_draws_no_bars() {
        let svg = render_curve_svg(&[0.5, 0.8], &[], &[100, 200, 300], "t");
        assert_eq!(svg.matches(r#"y2="288.00""#).count(), 2); // two ticks
        assert!(!svg.contains(r#"stroke-width="1.5"/>"#) || svg.contains("polyline"));
        assert_eq!(svg.matches(&format!(r#"y1="{TOP}""#)).count(), 1); // y axis only
    }

    #[test]
    fn every_boundary_chosen_draws_a_bar_per_tick() {
        let svg = render_curve_svg(&[0.5, 0.8], &[1, 2], &[100, 200, 300], "t");
        // one y-axis line plus two full-height bars
        assert_eq!(svg.matches(&format!(r#"y1="{TOP}""#)).count(), 3);
    }

    #[test]
    fn rendering_is_deterministic() {
        let a = render_curve_svg(&[0.25], &[1], &[10, 20], "same");
        let b = render_curve_svg(&[0.25], &[1], &[10, 20], "same");
        assert_eq!(a, b);
    }

    #[test]
    fn title_is_escaped() {
        let svg = render_curve_svg(&[0.5], &[], &[1, 1], "a<b&c");
        assert!(svg.contains("a&lt;b&amp;c"));
    }
}
