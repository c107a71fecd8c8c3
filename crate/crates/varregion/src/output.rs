//! Serialization of computed results to CSV, JSON, and SVG.
//!
//! All three formats are byte-deterministic: the same document always
//! serializes to the same bytes, independent of thread count or platform.
//! Floating-point values are written with 17 significant digits
//! (`{:.16e}`), which round-trips every finite `f64` exactly; the
//! [`parse_curve_csv`] / [`parse_curve_json`] readers recover the original
//! bits.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::verify::CampaignReport;
use crate::Cx;

/// A serializable result: free-form metadata plus one typed payload.
#[derive(Debug, Clone)]
pub struct OutputDocument {
    /// Ordered key/value pairs (order is preserved in every format).
    /// Deliberately excludes anything machine-dependent (thread counts,
    /// timestamps, paths) so output bytes stay reproducible.
    pub meta: Vec<(String, String)>,
    pub payload: Payload,
}

/// The typed payloads the tool can emit.
#[derive(Debug, Clone)]
pub enum Payload {
    /// A sampled boundary curve: `points[i]` at angle `thetas[i]`.
    Curve { thetas: Vec<f64>, points: Vec<Cx> },
    /// The same curve computed by both routes, for cross-checking.
    Comparison {
        thetas: Vec<f64>,
        closed: Vec<Cx>,
        quadrature: Vec<Cx>,
    },
    /// A single complex value.
    Point { value: Cx },
    /// A disk in the plane.
    Disk { center: Cx, radius: f64 },
    /// A verification campaign report.
    Report(CampaignReport),
}

/// Full-precision decimal form of a finite `f64`; 17 significant digits,
/// so parsing the string recovers the exact same bits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// JSON value for an `f64`: a number when finite, a quoted string
/// (`"inf"`, `"-inf"`, `"NaN"`) otherwise, since JSON has no non-finite
/// numbers.
fn json_f64(x: f64) -> String {
    if x.is_finite() {
        fmt_f64(x)
    } else {
        format!("\"{x}\"")
    }
}

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out
}

impl OutputDocument {
    pub fn new(payload: Payload) -> Self {
        Self {
            meta: Vec::new(),
            payload,
        }
    }

    pub fn with_meta(mut self, key: &str, value: impl Into<String>) -> Self {
        self.meta.push((key.to_string(), value.into()));
        self
    }

    /// CSV rendering.  Metadata is omitted (CSV carries data only); the
    /// header depends on the payload:
    ///
    /// - curve: `theta,re,im`
    /// - comparison: `theta,closed_re,closed_im,quadrature_re,quadrature_im,distance`
    /// - point / disk: `key,value`
    /// - report: `property,passes,failures,worst_margin`
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        match &self.payload {
            Payload::Curve { thetas, points } => {
                out.push_str("theta,re,im\n");
                for (t, p) in thetas.iter().zip(points) {
                    let _ = writeln!(out, "{},{},{}", fmt_f64(*t), fmt_f64(p.re), fmt_f64(p.im));
                }
            }
            Payload::Comparison {
                thetas,
                closed,
                quadrature,
            } => {
                out.push_str("theta,closed_re,closed_im,quadrature_re,quadrature_im,distance\n");
                for ((t, c), q) in thetas.iter().zip(closed).zip(quadrature) {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{}",
                        fmt_f64(*t),
                        fmt_f64(c.re),
                        fmt_f64(c.im),
                        fmt_f64(q.re),
                        fmt_f64(q.im),
                        fmt_f64((c - q).norm())
                    );
                }
            }
            Payload::Point { value } => {
                out.push_str("key,value\n");
                let _ = writeln!(out, "re,{}", fmt_f64(value.re));
                let _ = writeln!(out, "im,{}", fmt_f64(value.im));
            }
            Payload::Disk { center, radius } => {
                out.push_str("key,value\n");
                let _ = writeln!(out, "center_re,{}", fmt_f64(center.re));
                let _ = writeln!(out, "center_im,{}", fmt_f64(center.im));
                let _ = writeln!(out, "radius,{}", fmt_f64(*radius));
            }
            Payload::Report(report) => {
                out.push_str("property,passes,failures,worst_margin\n");
                for p in &report.properties {
                    let worst = if p.worst_margin.is_finite() {
                        fmt_f64(p.worst_margin)
                    } else {
                        format!("{}", p.worst_margin)
                    };
                    let _ = writeln!(out, "{},{},{},{}", p.name, p.passes, p.failures, worst);
                }
            }
        }
        out
    }

    /// JSON rendering: `{"meta": {...}, "kind": "...", ...}` with a stable
    /// key order.  Always valid JSON (verified by the round-trip tests).
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        out.push_str("{\n  \"meta\": {");
        for (i, (k, v)) in self.meta.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "\n    \"{}\": \"{}\"", json_escape(k), json_escape(v));
        }
        if !self.meta.is_empty() {
            out.push_str("\n  ");
        }
        out.push_str("},\n");
        match &self.payload {
            Payload::Curve { thetas, points } => {
                out.push_str("  \"kind\": \"curve\",\n  \"samples\": [");
                for (i, (t, p)) in thetas.iter().zip(points).enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    let _ = write!(
                        out,
                        "\n    {{\"theta\": {}, \"re\": {}, \"im\": {}}}",
                        json_f64(*t),
                        json_f64(p.re),
                        json_f64(p.im)
                    );
                }
                out.push_str("\n  ]\n}\n");
            }
            Payload::Comparison {
                thetas,
                closed,
                quadrature,
            } => {
                let max_distance = thetas
                    .iter()
                    .zip(closed)
                    .zip(quadrature)
                    .map(|((_, c), q)| (c - q).norm())
                    .fold(0.0f64, f64::max);
                out.push_str("  \"kind\": \"comparison\",\n  \"samples\": [");
                for (i, ((t, c), q)) in thetas.iter().zip(closed).zip(quadrature).enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    let _ = write!(
                        out,
                        "\n    {{\"theta\": {}, \"closed_re\": {}, \"closed_im\": {}, \
                         \"quadrature_re\": {}, \"quadrature_im\": {}, \"distance\": {}}}",
                        json_f64(*t),
                        json_f64(c.re),
                        json_f64(c.im),
                        json_f64(q.re),
                        json_f64(q.im),
                        json_f64((c - q).norm())
                    );
                }
                let _ = write!(
                    out,
                    "\n  ],\n  \"max_distance\": {}\n}}\n",
                    json_f64(max_distance)
                );
            }
            Payload::Point { value } => {
                let _ = write!(
                    out,
                    "  \"kind\": \"point\",\n  \"value\": {{\"re\": {}, \"im\": {}}}\n}}\n",
                    json_f64(value.re),
                    json_f64(value.im)
                );
            }
            Payload::Disk { center, radius } => {
                let _ = write!(
                    out,
                    "  \"kind\": \"disk\",\n  \"center\": {{\"re\": {}, \"im\": {}}},\n  \
                     \"radius\": {}\n}}\n",
                    json_f64(center.re),
                    json_f64(center.im),
                    json_f64(*radius)
                );
            }
            Payload::Report(report) => {
                let _ = write!(
                    out,
                    "  \"kind\": \"report\",\n  \"seed\": {},\n  \"trials\": {},\n  \
                     \"properties\": [",
                    report.seed, report.trials
                );
                for (i, p) in report.properties.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    let _ = write!(
                        out,
                        "\n    {{\"property\": \"{}\", \"passes\": {}, \"failures\": {}, \
                         \"worst_margin\": {}, \"failing\": [",
                        json_escape(&p.name),
                        p.passes,
                        p.failures,
                        json_f64(p.worst_margin)
                    );
                    for (j, f) in p.failing.iter().enumerate() {
                        if j > 0 {
                            out.push_str(", ");
                        }
                        let _ = write!(
                            out,
                            "{{\"trial\": {}, \"margin\": {}, \"params\": \"{}\"}}",
                            f.trial,
                            json_f64(f.margin),
                            json_escape(&f.params)
                        );
                    }
                    out.push_str("]}");
                }
                let _ = write!(
                    out,
                    "\n  ],\n  \"all_passed\": {}\n}}\n",
                    report.all_passed()
                );
            }
        }
        out
    }

    /// SVG rendering of a boundary curve: one closed `<polyline>` in
    /// mathematical orientation (the y axis is negated, so "up" in the
    /// image is `+Im`), plus two hairline coordinate axes.  The `viewBox`
    /// is the curve's bounding box padded by 5% of its larger side.
    ///
    /// # Errors
    /// `InvalidParams` for payloads other than a non-empty curve.
    pub fn to_svg(&self) -> Result<String> {
        let points = match &self.payload {
            Payload::Curve { points, .. } if !points.is_empty() => points,
            Payload::Curve { .. } => {
                return Err(Error::InvalidParams(
                    "cannot render an empty curve as SVG".into(),
                ))
            }
            _ => {
                return Err(Error::InvalidParams(
                    "SVG output is only defined for boundary curves".into(),
                ))
            }
        };
        let xs = points.iter().map(|p| p.re);
        let ys = points.iter().map(|p| -p.im);
        let x_min = xs.clone().fold(f64::INFINITY, f64::min);
        let x_max = xs.fold(f64::NEG_INFINITY, f64::max);
        let y_min = ys.clone().fold(f64::INFINITY, f64::min);
        let y_max = ys.fold(f64::NEG_INFINITY, f64::max);
        let span = (x_max - x_min).max(y_max - y_min).max(1e-9);
        let pad = 0.05 * span;
        let (vx, vy) = (x_min - pad, y_min - pad);
        let (vw, vh) = (x_max - x_min + 2.0 * pad, y_max - y_min + 2.0 * pad);

        let mut out = String::new();
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" \
             viewBox=\"{} {} {} {}\">",
            fmt_f64(vx),
            fmt_f64(vy),
            fmt_f64(vw),
            fmt_f64(vh)
        );
        // Hairline axes (clipped by the viewBox if the origin is outside).
        let axis_w = fmt_f64(span / 800.0);
        let _ = writeln!(
            out,
            "  <line x1=\"{}\" y1=\"0\" x2=\"{}\" y2=\"0\" stroke=\"#999999\" \
             stroke-width=\"{axis_w}\"/>",
            fmt_f64(vx),
            fmt_f64(vx + vw)
        );
        let _ = writeln!(
            out,
            "  <line x1=\"0\" y1=\"{}\" x2=\"0\" y2=\"{}\" stroke=\"#999999\" \
             stroke-width=\"{axis_w}\"/>",
            fmt_f64(vy),
            fmt_f64(vy + vh)
        );
        out.push_str("  <polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"");
        out.push_str(&fmt_f64(span / 400.0));
        out.push_str("\" points=\"");
        for (i, p) in points.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{},{}", fmt_f64(p.re), fmt_f64(-p.im));
        }
        // Close the loop back to the first vertex.
        let first = points[0];
        let _ = write!(out, " {},{}", fmt_f64(first.re), fmt_f64(-first.im));
        out.push_str("\"/>\n</svg>\n");
        Ok(out)
    }
}

/// Parse a curve CSV produced by [`OutputDocument::to_csv`]; exact inverse
/// on finite data.
pub fn parse_curve_csv(text: &str) -> Result<(Vec<f64>, Vec<Cx>)> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::InvalidParams("empty CSV input".into()))?;
    if header.trim() != "theta,re,im" {
        return Err(Error::InvalidParams(format!(
            "expected curve CSV header `theta,re,im`, found `{header}`"
        )));
    }
    let mut thetas = Vec::new();
    let mut points = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 {
            return Err(Error::InvalidParams(format!(
                "row {}: expected 3 fields, found {}",
                i + 2,
                fields.len()
            )));
        }
        let parse = |s: &str| -> Result<f64> {
            s.trim()
                .parse::<f64>()
                .map_err(|e| Error::InvalidParams(format!("row {}: {e}", i + 2)))
        };
        thetas.push(parse(fields[0])?);
        points.push(Cx::new(parse(fields[1])?, parse(fields[2])?));
    }
    Ok((thetas, points))
}

/// Parse a curve JSON document produced by [`OutputDocument::to_json`];
/// exact inverse on finite data.
pub fn parse_curve_json(text: &str) -> Result<(Vec<f64>, Vec<Cx>)> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| Error::InvalidParams(format!("invalid JSON: {e}")))?;
    let kind = value
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or_else(|| Error::InvalidParams("missing `kind` field".into()))?;
    if kind != "curve" {
        return Err(Error::InvalidParams(format!(
            "expected a curve document, found kind `{kind}`"
        )));
    }
    let samples = value
        .get("samples")
        .and_then(|s| s.as_array())
        .ok_or_else(|| Error::InvalidParams("missing `samples` array".into()))?;
    let mut thetas = Vec::with_capacity(samples.len());
    let mut points = Vec::with_capacity(samples.len());
    for (i, sample) in samples.iter().enumerate() {
        let field = |name: &str| -> Result<f64> {
            sample.get(name).and_then(|v| v.as_f64()).ok_or_else(|| {
                Error::InvalidParams(format!("sample {i}: missing numeric field `{name}`"))
            })
        };
        thetas.push(field("theta")?);
        points.push(Cx::new(field("re")?, field("im")?));
    }
    Ok((thetas, points))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn sample_curve() -> OutputDocument {
        OutputDocument::new(Payload::Curve {
            thetas: vec![-PI / 2.0, 0.0, PI / 2.0, PI],
            points: vec![
                Cx::new(0.3333333333333333, -0.125),
                Cx::new(0.5986122886681098, 0.0),
                Cx::new(0.3333333333333333, 0.125),
                Cx::new(0.4272952180016122, 0.0),
            ],
        })
        .with_meta("tool", "varregion")
        .with_meta("note", "quote \" and backslash \\ survive")
    }

    #[test]
    fn fmt_f64_round_trips_exactly() {
        for x in [
            PI,
            1.0 / 3.0,
            -0.0,
            5.986_122_886_681_098e-1,
            1e-308,
            -2.5e300,
            f64::MIN_POSITIVE,
        ] {
            let s = fmt_f64(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{s}");
        }
    }

    #[test]
    fn curve_csv_round_trip_is_exact() {
        let doc = sample_curve();
        let csv = doc.to_csv();
        assert!(csv.starts_with("theta,re,im\n"));
        let (thetas, points) = parse_curve_csv(&csv).unwrap();
        match &doc.payload {
            Payload::Curve {
                thetas: t0,
                points: p0,
            } => {
                assert_eq!(thetas, *t0);
                assert_eq!(points, *p0);
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn curve_json_round_trip_is_exact_and_meta_survives() {
        let doc = sample_curve();
        let json = doc.to_json();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["meta"]["tool"], "varregion");
        assert_eq!(
            value["meta"]["note"].as_str().unwrap(),
            "quote \" and backslash \\ survive"
        );
        let (thetas, points) = parse_curve_json(&json).unwrap();
        match &doc.payload {
            Payload::Curve {
                thetas: t0,
                points: p0,
            } => {
                assert_eq!(thetas, *t0);
                assert_eq!(points, *p0);
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn csv_parser_rejects_malformed_input() {
        assert!(parse_curve_csv("").is_err());
        assert!(parse_curve_csv("wrong,header,here\n1,2,3\n").is_err());
        assert!(parse_curve_csv("theta,re,im\n1,2\n").is_err());
        assert!(parse_curve_csv("theta,re,im\n1,2,abc\n").is_err());
    }

    #[test]
    fn json_parser_rejects_other_kinds() {
        let doc = OutputDocument::new(Payload::Point {
            value: Cx::new(1.0, 2.0),
        });
        assert!(parse_curve_json(&doc.to_json()).is_err());
        assert!(parse_curve_json("not json at all").is_err());
    }

    #[test]
    fn point_and_disk_csv_schema() {
        let point = OutputDocument::new(Payload::Point {
            value: Cx::new(0.25, -0.5),
        });
        let csv = point.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "key,value");
        assert!(lines[1].starts_with("re,"));
        assert!(lines[2].starts_with("im,"));
        assert_eq!(lines.len(), 3);

        let disk = OutputDocument::new(Payload::Disk {
            center: Cx::new(0.5129537533348609, 0.0),
            radius: 0.0856585353332487,
        });
        let csv = disk.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "key,value");
        assert!(lines[1].starts_with("center_re,"));
        assert!(lines[2].starts_with("center_im,"));
        assert!(lines[3].starts_with("radius,"));
        let radius: f64 = lines[3].split(',').nth(1).unwrap().parse().unwrap();
        assert_eq!(radius, 0.0856585353332487);
    }

    #[test]
    fn disk_json_is_valid_and_exact() {
        let disk = OutputDocument::new(Payload::Disk {
            center: Cx::new(-0.125, 0.75),
            radius: 1.0 / 3.0,
        })
        .with_meta("kindness", "checked");
        let value: serde_json::Value = serde_json::from_str(&disk.to_json()).unwrap();
        assert_eq!(value["kind"], "disk");
        assert_eq!(value["center"]["re"].as_f64().unwrap(), -0.125);
        assert_eq!(value["radius"].as_f64().unwrap(), 1.0 / 3.0);
    }

    #[test]
    fn comparison_json_reports_max_distance() {
        let doc = OutputDocument::new(Payload::Comparison {
            thetas: vec![0.0, 1.0],
            closed: vec![Cx::new(1.0, 0.0), Cx::new(0.0, 1.0)],
            quadrature: vec![Cx::new(1.0, 0.0), Cx::new(0.0, 1.5)],
        });
        let value: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(value["kind"], "comparison");
        assert_eq!(value["max_distance"].as_f64().unwrap(), 0.5);
        let csv = doc.to_csv();
        assert!(csv.starts_with(
            "theta,closed_re,closed_im,quadrature_re,quadrature_im,distance\n"
        ));
        assert_eq!(csv.lines().count(), 3);
    }

    #[test]
    fn svg_is_deterministic_and_y_negated() {
        let doc = sample_curve();
        let svg1 = doc.to_svg().unwrap();
        let svg2 = doc.to_svg().unwrap();
        assert_eq!(svg1, svg2);
        assert!(svg1.starts_with("<svg "));
        assert!(svg1.trim_end().ends_with("</svg>"));
        assert_eq!(svg1.matches("<polyline").count(), 1);
        assert_eq!(svg1.matches("<line").count(), 2);
        // The point (1/3, −1/8) has im < 0, so its SVG y must be positive.
        assert!(svg1.contains(&format!(
            "{},{}",
            fmt_f64(0.3333333333333333),
            fmt_f64(0.125)
        )));
        // Closed loop: first vertex appears twice.
        let first = format!(
            "{},{}",
            fmt_f64(0.3333333333333333),
            fmt_f64(0.125)
        );
        assert_eq!(svg1.matches(&first).count(), 2);
    }

    #[test]
    fn svg_rejects_non_curve_payloads() {
        let doc = OutputDocument::new(Payload::Point {
            value: Cx::new(0.0, 0.0),
        });
        assert!(doc.to_svg().is_err());
        let empty = OutputDocument::new(Payload::Curve {
            thetas: vec![],
            points: vec![],
        });
        assert!(empty.to_svg().is_err());
    }

    #[test]
    fn report_serialization_matches_schema() {
        use crate::verify::{CampaignReport, FailingTrial, PropertyReport};
        let report = CampaignReport {
            seed: 42,
            trials: 3,
            properties: vec![
                PropertyReport {
                    name: "kernels/mobius_involution".into(),
                    passes: 3,
                    failures: 0,
                    worst_margin: 9.5e-15,
                    failing: vec![],
                },
                PropertyReport {
                    name: "regions/dual_route".into(),
                    passes: 2,
                    failures: 1,
                    worst_margin: f64::NEG_INFINITY,
                    failing: vec![FailingTrial {
                        trial: 1,
                        margin: f64::NEG_INFINITY,
                        params: "error: quadrature did not converge".into(),
                    }],
                },
            ],
        };
        let doc = OutputDocument::new(Payload::Report(report));
        let csv = doc.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "property,passes,failures,worst_margin");
        assert_eq!(lines.len(), 3);
        assert!(lines[2].starts_with("regions/dual_route,2,1,"));
        // Non-finite margins must still produce valid JSON.
        let value: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(value["kind"], "report");
        assert_eq!(value["all_passed"], false);
        assert_eq!(value["properties"][0]["passes"].as_u64().unwrap(), 3);
        assert_eq!(
            value["properties"][1]["worst_margin"].as_str().unwrap(),
            "-inf"
        );
        assert_eq!(
            value["properties"][1]["failing"][0]["trial"].as_u64().unwrap(),
            1
        );
    }
}
