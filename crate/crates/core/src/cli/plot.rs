//! SVG and PPM rendering of zero loci. Curve points come from exact root
//! isolation along pixel rows and columns; floats appear only when placing
//! them on the canvas.

use crate::exactmath::{int, isolate_roots, to_decimal, to_f64, BiPoly, IsolatedRoot, Rational, UniPoly};
use crate::ftriangle::{d_operator, FTriangle};
use crate::par::{self, Exec};
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layer {
    F,
    DF,
    D2F,
}

impl Layer {
    pub fn parse(s: &str) -> Option<Layer> {
        match s.trim() {
            "F" => Some(Layer::F),
            "DF" => Some(Layer::DF),
            "D2F" => Some(Layer::D2F),
            _ => None,
        }
    }

    fn order(self) -> u32 {
        match self {
            Layer::F => 0,
            Layer::DF => 1,
            Layer::D2F => 2,
        }
    }

    fn name(self) -> &'static str {
        ["F", "DF", "D2F"][self.order() as usize]
    }

    /// Dash period and drawn length in pixels; `None` is solid.
    fn dash(self) -> Option<(f64, f64)> {
        match self {
            Layer::F => None,
            Layer::DF => Some((9.0, 6.0)),
            Layer::D2F => Some((4.0, 1.5)),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PlotSpec {
    pub lo: Rational,
    pub hi: Rational,
    /// Side of the square plot area in pixels.
    pub size: u32,
    pub margin: u32,
    pub layers: Vec<Layer>,
    pub label: String,
    pub exec: Exec,
}

impl PlotSpec {
    pub fn new(label: impl Into<String>) -> Self {
        PlotSpec {
            lo: Rational::new((-1).into(), 4.into()),
            hi: Rational::new(5.into(), 4.into()),
            size: 400,
            margin: 40,
            layers: vec![Layer::F, Layer::DF, Layer::D2F],
            label: label.into(),
            exec: Exec::default(),
        }
    }

    fn span(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn px(&self, x: f64) -> f64 {
        self.margin as f64 + (x - to_f64(&self.lo)) / to_f64(&self.span()) * self.size as f64
    }

    pub fn py(&self, y: f64) -> f64 {
        self.margin as f64 + (to_f64(&self.hi) - y) / to_f64(&self.span()) * self.size as f64
    }

    /// Centre of pixel row or column `i`, counted from the low end.
    fn sample(&self, i: u32) -> Rational {
        &self.lo + (int(i as i64) + Rational::new(1.into(), 2.into())) * self.span() / int(self.size as i64)
    }
}

/// Where the zero locus of `F` meets the edges of the unit square.
#[derive(Clone, Debug)]
pub struct EdgeHit {
    pub edge: &'static str,
    /// Coordinate along the edge.
    pub at: IsolatedRoot,
    pub x: f64,
    pub y: f64,
}

pub fn edge_hits(p: &BiPoly) -> Vec<EdgeHit> {
    let zero = Rational::from_integer(0.into());
    let one = Rational::from_integer(1.into());
    let w = Rational::new(1.into(), (1u64 << 40).into());
    let mut out = Vec::new();
    let edges: [(&'static str, UniPoly, bool, f64); 4] = [
        ("y=0", p.specialize_y(&zero), true, 0.0),
        ("y=1", p.specialize_y(&one), true, 1.0),
        ("x=0", p.specialize_x(&zero), false, 0.0),
        ("x=1", p.specialize_x(&one), false, 1.0),
    ];
    for (edge, u, along_x, fixed) in edges {
        if u.is_zero() {
            continue;
        }
        for r in isolate_roots(&u, &zero, &one, &w).unwrap_or_default() {
            let t = to_f64(&r.midpoint());
            let (x, y) = if along_x { (t, fixed) } else { (fixed, t) };
            out.push(EdgeHit { edge, at: r, x, y });
        }
    }
    out
}

fn layer_polys(f: &FTriangle, layers: &[Layer]) -> Vec<(Layer, BiPoly)> {
    let mut out = Vec::new();
    for &l in layers {
        let mut t = f.clone();
        let mut ok = true;
        for _ in 0..l.order() {
            match d_operator(&t) {
                Ok(d) => t = d,
                Err(_) => ok = false,
            }
        }
        if ok && t.rank() > 0 {
            out.push((l, t.poly().clone()));
        }
    }
    out
}

fn roots_in_view(u: &UniPoly, spec: &PlotSpec) -> Vec<f64> {
    if u.is_zero() || u.is_constant() {
        return Vec::new();
    }
    let w = spec.span() / int(8 * spec.size as i64);
    isolate_roots(u, &spec.lo, &spec.hi, &w)
        .unwrap_or_default()
        .iter()
        .map(|r| to_f64(&r.midpoint()))
        .collect()
}

/// Curve pieces in pixel coordinates, for one layer.
fn segments(p: &BiPoly, spec: &PlotSpec) -> Vec<[f64; 4]> {
    let idx: Vec<u32> = (0..spec.size).collect();
    let samples: Vec<Rational> = idx.iter().map(|&i| spec.sample(i)).collect();
    let rows = par::map(spec.exec, &samples, |y| roots_in_view(&p.specialize_y(y), spec));
    let cols = par::map(spec.exec, &samples, |x| roots_in_view(&p.specialize_x(x), spec));
    let mut out = Vec::new();
    let link = |a: &[f64], b: &[f64], t0: f64, t1: f64, rowwise: bool, out: &mut Vec<[f64; 4]>| {
        for &u in a {
            let Some(&v) = b.iter().min_by(|p, q| (*p - u).abs().total_cmp(&(*q - u).abs())) else {
                continue;
            };
            let seg = if rowwise {
                [spec.px(u), spec.py(t0), spec.px(v), spec.py(t1)]
            } else {
                [spec.px(t0), spec.py(u), spec.px(t1), spec.py(v)]
            };
            let d = if rowwise { (seg[0] - seg[2]).abs() } else { (seg[1] - seg[3]).abs() };
            if d <= 2.0 {
                out.push(seg);
            }
        }
    };
    for i in 0..samples.len().saturating_sub(1) {
        let (t0, t1) = (to_f64(&samples[i]), to_f64(&samples[i + 1]));
        link(&rows[i], &rows[i + 1], t0, t1, true, &mut out);
        link(&cols[i], &cols[i + 1], t0, t1, false, &mut out);
    }
    out
}

fn keep(layer: Layer, seg: &[f64; 4]) -> bool {
    match layer.dash() {
        None => true,
        Some((period, on)) => {
            let m = ((seg[0] + seg[2]) / 2.0 + (seg[1] + seg[3]) / 2.0).rem_euclid(period);
            m < on
        }
    }
}

fn colour(layer: Layer) -> &'static str {
    match layer {
        Layer::F => "#000000",
        Layer::DF => "#1f4e9c",
        Layer::D2F => "#9c1f1f",
    }
}

pub fn render_svg(f: &FTriangle, spec: &PlotSpec) -> String {
    let total = spec.size + 2 * spec.margin;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{total}" height="{h}" viewBox="0 0 {total} {h}">"#,
        h = total + 60
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let (x0, y0, x1, y1) = (spec.px(0.0), spec.py(1.0), spec.px(1.0), spec.py(0.0));
    let _ = writeln!(
        s,
        r##"<rect class="unit-square" x="{x0:.2}" y="{y0:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="#888888" stroke-width="1"/>"##,
        x1 - x0,
        y1 - y0
    );
    for (layer, p) in layer_polys(f, &spec.layers) {
        let mut d = String::new();
        for seg in segments(&p, spec).iter().filter(|g| keep(layer, g)) {
            let _ = write!(d, "M{:.2} {:.2}L{:.2} {:.2}", seg[0], seg[1], seg[2], seg[3]);
        }
        let _ = writeln!(
            s,
            r#"<path class="layer-{}" d="{d}" fill="none" stroke="{}" stroke-width="1.5" stroke-linecap="round"/>"#,
            layer.name(),
            colour(layer)
        );
    }
    let mut notes = Vec::new();
    for h in edge_hits(f.poly()) {
        let exact = match h.at.exact_value() {
            Some(v) => v.to_string(),
            None => format!("({}, {})", to_decimal(&h.at.lo, 6), to_decimal(&h.at.hi, 6)),
        };
        let _ = writeln!(
            s,
            r#"<circle class="edge-hit" data-edge="{}" data-value="{exact}" cx="{:.2}" cy="{:.2}" r="2.5" fill="black"/>"#,
            h.edge,
            spec.px(h.x),
            spec.py(h.y)
        );
        notes.push(format!("{}: {}", h.edge, to_decimal(&h.at.midpoint(), 4)));
    }
    let base = total + 16;
    let _ = writeln!(s, r#"<text x="{}" y="{base}" font-family="monospace" font-size="12">{}</text>"#, spec.margin, escape(&spec.label));
    for (k, chunk) in notes.chunks(4).enumerate() {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-family="monospace" font-size="10">{}</text>"#,
            spec.margin,
            base + 14 * (k as u32 + 1),
            escape(&chunk.join("   "))
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Binary PPM (P6) raster of the same picture, without text.
pub fn render_ppm(f: &FTriangle, spec: &PlotSpec) -> Vec<u8> {
    let n = (spec.size + 2 * spec.margin) as usize;
    let mut img = vec![255u8; n * n * 3];
    let put = |x: f64, y: f64, rgb: [u8; 3], img: &mut Vec<u8>| {
        let (i, j) = (x.round() as i64, y.round() as i64);
        if i >= 0 && j >= 0 && (i as usize) < n && (j as usize) < n {
            let k = (j as usize * n + i as usize) * 3;
            img[k..k + 3].copy_from_slice(&rgb);
        }
    };
    let (x0, y0, x1, y1) = (spec.px(0.0), spec.py(1.0), spec.px(1.0), spec.py(0.0));
    let grey = [136, 136, 136];
    for t in 0..=((x1 - x0) as i64) {
        let t = t as f64;
        put(x0 + t, y0, grey, &mut img);
        put(x0 + t, y1, grey, &mut img);
        put(x0, y0 + t, grey, &mut img);
        put(x1, y0 + t, grey, &mut img);
    }
    for (layer, p) in layer_polys(f, &spec.layers) {
        let rgb = match layer {
            Layer::F => [0, 0, 0],
            Layer::DF => [31, 78, 156],
            Layer::D2F => [156, 31, 31],
        };
        for seg in segments(&p, spec).iter().filter(|g| keep(layer, g)) {
            let steps = ((seg[2] - seg[0]).abs().max((seg[3] - seg[1]).abs()).ceil() as usize).max(1);
            for k in 0..=steps {
                let t = k as f64 / steps as f64;
                put(seg[0] + t * (seg[2] - seg[0]), seg[1] + t * (seg[3] - seg[1]), rgb, &mut img);
            }
        }
    }
    let mut out = format!("P6\n{n} {n}\n255\n").into_bytes();
    out.extend(img);
    out
}
