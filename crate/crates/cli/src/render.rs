//! Deterministic SVG pictures of braids, configurations and linearisations.
//!
//! The viewport is the unit square scaled by 100 with `y` pointing up in
//! model space. Layout coordinates are printed with three decimals so the
//! output is byte-stable; nothing semantic is read back from them.

use std::fmt::{Display, Write};

use sigmab::braid::BraidWord;
use sigmab::config::{embed_word, Configuration};

const SCALE: f64 = 100.0;
const DOT_RADIUS: f64 = 1.5;
const FONT_SIZE: f64 = 4.0;
const MARGIN: f64 = 5.0;
/// Half-length of the break in an under-strand.
const GAP: f64 = 0.18;

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    // "-0.000" and "0.000" must print the same
    if s.trim_start_matches('-')
        .chars()
        .all(|c| c == '0' || c == '.')
    {
        "0.000".into()
    } else {
        s
    }
}

pub fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(c),
        }
    }
    out
}

struct Svg {
    body: String,
}

impl Svg {
    fn new() -> Self {
        let mut svg = Svg {
            body: String::new(),
        };
        svg.raw(&format!(
            r#"<rect x="0.000" y="0.000" width="{0}" height="{0}" fill="none" stroke="black" stroke-width="0.500"/>"#,
            num(SCALE)
        ));
        svg
    }

    fn raw(&mut self, element: &str) {
        self.body.push_str("  ");
        self.body.push_str(element);
        self.body.push('\n');
    }

    fn line(&mut self, (x1, y1): (f64, f64), (x2, y2): (f64, f64), extra: &str) {
        self.raw(&format!(
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="0.600"{extra}/>"#,
            num(x1),
            num(y1),
            num(x2),
            num(y2)
        ));
    }

    fn dot(&mut self, (cx, cy): (f64, f64), filled: bool) {
        let fill = if filled { "black" } else { "white" };
        self.raw(&format!(
            r#"<circle cx="{}" cy="{}" r="{}" fill="{fill}" stroke="black" stroke-width="0.400"/>"#,
            num(cx),
            num(cy),
            num(DOT_RADIUS)
        ));
    }

    fn label(&mut self, (x, y): (f64, f64), text: &str) {
        self.raw(&format!(
            r#"<text x="{}" y="{}" font-family="monospace" font-size="{}">{}</text>"#,
            num(x + 2.5),
            num(y - 2.5),
            num(FONT_SIZE),
            escape(text)
        ));
    }

    fn finish(self) -> String {
        let mut out = String::new();
        let _ = write!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {0} {0}\" width=\"{0}\" height=\"{0}\">\n{1}</svg>\n",
            SCALE as u32, self.body
        );
        out
    }
}

/// Model coordinates to viewport coordinates.
fn place<L>(p: &sigmab::config::LPoint<L>) -> (f64, f64) {
    (p.x.to_f64() * SCALE, (1.0 - p.y.to_f64()) * SCALE)
}

fn draw_points<L: Display + Clone>(svg: &mut Svg, config: &Configuration<L>) {
    for p in config.points() {
        let at = place(p);
        svg.dot(at, true);
        svg.label(at, &p.label.to_string());
    }
}

/// Frame, one dot per point and its label, in canonical order.
pub fn render_config<L: Display + Clone>(config: &Configuration<L>) -> String {
    let mut svg = Svg::new();
    draw_points(&mut svg, config);
    svg.finish()
}

/// The configuration, the vertical line through the centre carrying the
/// canonical word, and one straight strand per point.
pub fn render_linearisation<L: Display + Clone + PartialEq + std::fmt::Debug>(
    config: &Configuration<L>,
) -> String {
    let mut svg = Svg::new();
    let centre = 0.5 * SCALE;
    svg.line(
        (centre, 0.0),
        (centre, SCALE),
        r#" stroke-dasharray="2.000 1.500""#,
    );
    let line = embed_word(&config.canonical_rep().word);
    // both sides list points top to bottom, so the i-th strand pairs them
    for (from, to) in config.points().iter().zip(line.points()) {
        svg.line(place(from), place(to), "");
    }
    for p in line.points() {
        svg.dot(place(p), false);
    }
    draw_points(&mut svg, config);
    svg.finish()
}

/// Strands run top to bottom; in a positive crossing the strand coming from
/// the left passes over.
pub fn render_braid(word: &BraidWord) -> String {
    let mut svg = Svg::new();
    let n = word.strands();
    let x = |i: usize| SCALE * (i + 1) as f64 / (n + 1) as f64;
    let rows = word.len().max(1);
    let step = (SCALE - 2.0 * MARGIN) / rows as f64;
    let y = |r: usize| MARGIN + step * r as f64;
    if word.is_empty() {
        for i in 0..n {
            svg.line((x(i), y(0)), (x(i), y(1)), "");
        }
    }
    for (r, g) in word.gens().iter().enumerate() {
        let (left, right) = (g.index - 1, g.index);
        for i in (0..n).filter(|&i| i != left && i != right) {
            svg.line((x(i), y(r)), (x(i), y(r + 1)), "");
        }
        let down = ((x(left), y(r)), (x(right), y(r + 1)));
        let up = ((x(right), y(r)), (x(left), y(r + 1)));
        let (over, under) = if g.inverse { (up, down) } else { (down, up) };
        svg.line(over.0, over.1, "");
        let lerp = |t: f64| {
            (
                under.0 .0 + (under.1 .0 - under.0 .0) * t,
                under.0 .1 + (under.1 .1 - under.0 .1) * t,
            )
        };
        svg.line(under.0, lerp(0.5 - GAP), "");
        svg.line(lerp(0.5 + GAP), under.1, "");
    }
    svg.finish()
}
