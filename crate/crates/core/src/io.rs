//! Flat-file formats: trace CSV, beliefs CSV and a bare-bones SVG plot.
//!
//! Floats are written with `{:?}`, the shortest decimal that parses back to
//! the same `f64`.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::model::BeliefConfig;
use crate::trace::Trace;

/// Header `t,b_0,...,b_{n-1},rho`, then one row per recorded step.
pub fn trace_csv(trace: &Trace) -> String {
    let n = trace.initial().len();
    let mut out = String::from("t");
    for i in 0..n {
        let _ = write!(out, ",b_{i}");
    }
    out.push_str(",rho\n");
    for (t, b, rho) in trace.iter() {
        let _ = write!(out, "{t}");
        for x in b.as_slice() {
            let _ = write!(out, ",{x:?}");
        }
        let _ = writeln!(out, ",{rho:?}");
    }
    out
}

/// One parsed trace CSV row.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceRow {
    pub t: usize,
    pub beliefs: Vec<f64>,
    pub rho: f64,
}

pub fn parse_trace_csv(text: &str) -> Result<Vec<TraceRow>> {
    let bad = |line: usize, msg: String| Error::Config(format!("trace csv line {line}: {msg}"));
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| bad(1, "empty file".into()))?;
    let columns: Vec<&str> = header.split(',').collect();
    if columns.len() < 3 || columns[0] != "t" || columns[columns.len() - 1] != "rho" {
        return Err(bad(1, format!("unexpected header `{header}`")));
    }
    let n = columns.len() - 2;
    lines
        .filter(|(_, l)| !l.is_empty())
        .map(|(k, line)| {
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != n + 2 {
                return Err(bad(k + 1, format!("expected {} fields, found {}", n + 2, fields.len())));
            }
            let num = |s: &str| s.parse::<f64>().map_err(|_| bad(k + 1, format!("bad number `{s}`")));
            Ok(TraceRow {
                t: fields[0].parse().map_err(|_| bad(k + 1, format!("bad step `{}`", fields[0])))?,
                beliefs: fields[1..=n].iter().map(|s| num(s)).collect::<Result<_>>()?,
                rho: num(fields[n + 1])?,
            })
        })
        .collect()
}

/// Header `agent,belief`, one row per agent.
pub fn beliefs_csv(beliefs: &BeliefConfig) -> String {
    let mut out = String::from("agent,belief\n");
    for (i, b) in beliefs.as_slice().iter().enumerate() {
        let _ = writeln!(out, "{i},{b:?}");
    }
    out
}

pub fn parse_beliefs_csv(text: &str) -> Result<BeliefConfig> {
    let values = text
        .lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(k, l)| {
            l.split(',')
                .nth(1)
                .and_then(|v| v.trim().parse::<f64>().ok())
                .ok_or_else(|| Error::Config(format!("beliefs csv line {}: `{l}`", k + 2)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BeliefConfig::new(values)?)
}

/// Two stacked panels: agent beliefs over time (at most 64 agents, evenly
/// sampled) and polarization over time.
pub fn trace_svg(trace: &Trace) -> String {
    const W: f64 = 800.0;
    const H: f64 = 240.0;
    const PAD: f64 = 30.0;
    let t_end = trace.last_step().max(1) as f64;
    let x = |t: usize| PAD + (W - 2.0 * PAD) * t as f64 / t_end;
    let n = trace.initial().len();
    let stride = n.div_ceil(64).max(1);
    let rho_max = trace.polarization.iter().copied().fold(0.0, f64::max).max(f64::MIN_POSITIVE);

    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{}\" font-family=\"sans-serif\" font-size=\"12\">\n",
        2.0 * H
    );
    let _ = writeln!(svg, "<text x=\"{PAD}\" y=\"16\">beliefs</text>");
    for i in (0..n).step_by(stride) {
        let points: Vec<String> = trace
            .iter()
            .map(|(t, b, _)| format!("{:.2},{:.2}", x(t), H - PAD - (H - 2.0 * PAD) * b[i]))
            .collect();
        let _ = writeln!(svg, "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1\" points=\"{}\"/>", points.join(" "));
    }
    let _ = writeln!(svg, "<text x=\"{PAD}\" y=\"{}\">rho (max {rho_max:.4})</text>", H + 16.0);
    let points: Vec<String> = trace
        .iter()
        .map(|(t, _, rho)| format!("{:.2},{:.2}", x(t), 2.0 * H - PAD - (H - 2.0 * PAD) * rho / rho_max))
        .collect();
    let _ = writeln!(svg, "<polyline fill=\"none\" stroke=\"firebrick\" stroke-width=\"1.5\" points=\"{}\"/>", points.join(" "));
    svg.push_str("</svg>\n");
    svg
}

pub(crate) fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::io(path, e))
}

pub(crate) fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}
