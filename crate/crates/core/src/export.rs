//! CSV, JSON and SVG serialization of analysis results.
//!
//! Numbers are rounded to 12 significant digits in every format, so CSV and
//! JSON exports of the same result carry identical values. CSV uses LF line
//! endings and a header row. JSON is a single object `{ "meta": ..., "data": ... }`.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use serde_json::{json, Map, Value};

use crate::sweep::{boundary_extract, RegionGrid};
use crate::value::CurveSample;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

/// Rounds to 12 significant digits.
pub fn sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// Shortest decimal text of `x` after rounding to 12 significant digits.
pub fn fmt_num(x: f64) -> String {
    if x.is_nan() {
        "nan".to_owned()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_owned()
    } else {
        let r = sig12(x);
        // avoid "-0"
        if r == 0.0 {
            "0".to_owned()
        } else {
            format!("{r}")
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Flag(bool),
    Text(String),
    /// Empty CSV field, JSON `null`.
    Null,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => fmt_num(*x),
            Cell::Int(i) => i.to_string(),
            Cell::Flag(b) => if *b { "1" } else { "0" }.to_owned(),
            Cell::Text(s) => {
                if s.contains([',', '"', '\n']) {
                    format!("\"{}\"", s.replace('"', "\"\""))
                } else {
                    s.clone()
                }
            }
            Cell::Null => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) => {
                serde_json::Number::from_f64(sig12(*x)).map_or(Value::Null, Value::Number)
            }
            Cell::Int(i) => json!(i),
            Cell::Flag(b) => json!(u8::from(*b)),
            Cell::Text(s) => json!(s),
            Cell::Null => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Flag(b)
    }
}

impl From<usize> for Cell {
    fn from(i: usize) -> Self {
        Cell::Int(i as i64)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Null, Cell::Num)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_owned())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

/// Row-major tabular result shared by the CSV and JSON writers.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// A single row becomes one object, several rows an array of objects.
    pub fn to_json_value(&self) -> Value {
        let mut objs: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut m = Map::new();
                for (k, v) in self.header.iter().zip(row) {
                    m.insert(k.clone(), v.json());
                }
                Value::Object(m)
            })
            .collect();
        if objs.len() == 1 {
            objs.pop().unwrap_or(Value::Null)
        } else {
            Value::Array(objs)
        }
    }
}

/// Rounds every number in a JSON tree to 12 significant digits.
pub fn round_json(v: &mut Value) {
    match v {
        Value::Number(n) => {
            if let (Some(x), false) = (n.as_f64(), n.is_i64() || n.is_u64()) {
                *v = serde_json::Number::from_f64(sig12(x)).map_or(Value::Null, Value::Number);
            }
        }
        Value::Array(a) => a.iter_mut().for_each(round_json),
        Value::Object(o) => o.values_mut().for_each(round_json),
        _ => {}
    }
}

pub fn json_document(meta: Value, mut data: Value) -> String {
    round_json(&mut data);
    let doc = json!({ "meta": meta, "data": data });
    let mut s = serde_json::to_string_pretty(&doc).unwrap_or_default();
    s.push('\n');
    s
}

pub fn region_table(grid: &RegionGrid) -> Table {
    let mut t = Table::new(["p", "delta", "cooperate"]);
    for (i, &p) in grid.p_values.iter().enumerate() {
        for (j, &d) in grid.delta_values.iter().enumerate() {
            t.push(vec![p.into(), d.into(), grid.cells[i][j].into()]);
        }
    }
    t
}

pub fn curve_table(samples: &[CurveSample]) -> Table {
    let mut t = Table::new(["p", "v_c", "v_d", "gap"]);
    for s in samples {
        t.push(vec![s.p.into(), s.v_c.into(), s.v_d.into(), s.gap.into()]);
    }
    t
}

const W: f64 = 640.0;
const H: f64 = 480.0;
const ML: f64 = 60.0;
const MR: f64 = 20.0;
const MT: f64 = 30.0;
const MB: f64 = 50.0;

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        ML + (x - self.x0) / (self.x1 - self.x0) * (W - ML - MR)
    }

    fn py(&self, y: f64) -> f64 {
        H - MB - (y - self.y0) / (self.y1 - self.y0) * (H - MT - MB)
    }

    fn axes(&self, out: &mut String, x_label: &str, y_label: &str) {
        let (l, r, t, b) = (ML, W - MR, MT, H - MB);
        let _ = writeln!(
            out,
            r#"<rect x="{l}" y="{t}" width="{}" height="{}" fill="none" stroke="black"/>"#,
            r - l,
            b - t
        );
        for i in 0..=10 {
            let f = i as f64 / 10.0;
            let xv = self.x0 + f * (self.x1 - self.x0);
            let x = self.px(xv);
            let _ = writeln!(
                out,
                r#"<line x1="{x:.2}" y1="{b}" x2="{x:.2}" y2="{}" stroke="black"/><text x="{x:.2}" y="{}" font-size="11" text-anchor="middle">{}</text>"#,
                b + 5.0,
                b + 18.0,
                fmt_tick(xv)
            );
            let yv = self.y0 + f * (self.y1 - self.y0);
            let y = self.py(yv);
            let _ = writeln!(
                out,
                r#"<line x1="{}" y1="{y:.2}" x2="{l}" y2="{y:.2}" stroke="black"/><text x="{}" y="{:.2}" font-size="11" text-anchor="end">{}</text>"#,
                l - 5.0,
                l - 8.0,
                y + 4.0,
                fmt_tick(yv)
            );
        }
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" font-size="13" text-anchor="middle">{x_label}</text>"#,
            (l + r) / 2.0,
            H - 10.0
        );
        let _ = writeln!(
            out,
            r#"<text x="15" y="{}" font-size="13" text-anchor="middle" transform="rotate(-90 15 {})">{y_label}</text>"#,
            (t + b) / 2.0,
            (t + b) / 2.0
        );
    }
}

fn fmt_tick(v: f64) -> String {
    let r = (v * 1e6).round() / 1e6;
    fmt_num(r)
}

fn svg_open(title: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{}" y="20" font-size="14" text-anchor="middle">{}</text>"#,
        W / 2.0,
        escape(title)
    );
    s
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Heatmap of the cooperation region with the threshold curve on top.
pub fn region_svg(grid: &RegionGrid, title: &str) -> String {
    let frame = Frame {
        x0: grid.spec.p_axis.lo,
        x1: grid.spec.p_axis.hi,
        y0: grid.spec.delta_axis.lo,
        y1: grid.spec.delta_axis.hi,
    };
    let mut s = svg_open(title);
    let np = grid.p_values.len();
    let nd = grid.delta_values.len();
    let cw = (frame.x1 - frame.x0) / np as f64;
    let ch = (frame.y1 - frame.y0) / nd as f64;
    for (i, col) in grid.cells.iter().enumerate() {
        // merge runs of cooperating cells within a column
        let mut j = 0;
        while j < nd {
            if !col[j] {
                j += 1;
                continue;
            }
            let start = j;
            while j < nd && col[j] {
                j += 1;
            }
            let x = frame.px(frame.x0 + i as f64 * cw);
            let x2 = frame.px(frame.x0 + (i + 1) as f64 * cw);
            let ytop = frame.py(frame.y0 + j as f64 * ch);
            let ybot = frame.py(frame.y0 + start as f64 * ch);
            let _ = writeln!(
                s,
                r##"<rect x="{x:.3}" y="{ytop:.3}" width="{:.3}" height="{:.3}" fill="#4a7fd4"/>"##,
                x2 - x,
                ybot - ytop
            );
        }
    }
    let pts: Vec<String> = boundary_extract(grid)
        .iter()
        .map(|b| {
            let d = b.delta_star.clamp(frame.y0, frame.y1);
            format!("{:.3},{:.3}", frame.px(b.p), frame.py(d))
        })
        .collect();
    let _ = writeln!(
        s,
        r#"<polyline points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
        pts.join(" ")
    );
    frame.axes(&mut s, "p (attack success rate)", "delta (discount factor)");
    s.push_str("</svg>\n");
    s
}

/// `V(C)` and `V(D)` against `p`.
pub fn curves_svg(samples: &[CurveSample], title: &str) -> String {
    let lo = samples
        .iter()
        .flat_map(|s| [s.v_c, s.v_d])
        .fold(f64::INFINITY, f64::min);
    let hi = samples
        .iter()
        .flat_map(|s| [s.v_c, s.v_d])
        .fold(f64::NEG_INFINITY, f64::max);
    let pad = ((hi - lo) * 0.05).max(1e-3);
    let frame = Frame {
        x0: 0.0,
        x1: 1.0,
        y0: lo - pad,
        y1: hi + pad,
    };
    let mut s = svg_open(title);
    let path = |f: &dyn Fn(&CurveSample) -> f64| {
        samples
            .iter()
            .enumerate()
            .map(|(i, smp)| {
                format!(
                    "{}{:.3},{:.3}",
                    if i == 0 { "M" } else { "L" },
                    frame.px(smp.p),
                    frame.py(f(smp))
                )
            })
            .collect::<Vec<_>>()
            .join(" ")
    };
    let _ = writeln!(
        s,
        r##"<path d="{}" fill="none" stroke="#1f77b4" stroke-width="2"/>"##,
        path(&|x| x.v_c)
    );
    let _ = writeln!(
        s,
        r##"<path d="{}" fill="none" stroke="#d62728" stroke-width="2"/>"##,
        path(&|x| x.v_d)
    );
    let _ = writeln!(
        s,
        r##"<text x="{}" y="{}" font-size="12" fill="#1f77b4">V_C</text><text x="{}" y="{}" font-size="12" fill="#d62728">V_D</text>"##,
        W - MR - 60.0,
        MT + 15.0,
        W - MR - 30.0,
        MT + 15.0
    );
    frame.axes(&mut s, "p (attack success rate)", "discounted value");
    s.push_str("</svg>\n");
    s
}

/// Writes `contents` to `path` through a temporary file in the same directory
/// and a rename.
pub fn write_atomic(path: &Path, contents: &str) -> io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    io::Write::write_all(&mut tmp, contents.as_bytes())?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
