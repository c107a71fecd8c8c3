//! Recompute the five reference parameter rows and export each region
//! boundary as CSV, JSON, and SVG — the same documents the `table1` CLI
//! subcommand writes — into a temporary directory.

use varregion::output::{OutputDocument, Payload};
use varregion::regions::boundary_curve;
use varregion::subclasses::{vg_boundary_closed_form, SubclassParamsF};
use varregion::table1::rows;
use varregion::{CurveMethod, Cx, QuadratureConfig, RegionBoundary};

fn main() -> varregion::Result<()> {
    let cfg = QuadratureConfig::default();
    let dir = std::env::temp_dir().join("varregion_table1");
    std::fs::create_dir_all(&dir).expect("cannot create the output directory");

    let mut written = 0;
    for row in rows() {
        println!(
            "row {}: beta = {}, lambda = {}, z0 = {}",
            row.index, row.beta, row.lambda, row.z0
        );

        let parent = boundary_curve(&row.class_params()?, 256, CurveMethod::ClosedForm, &cfg)?;
        let pf = SubclassParamsF::new(Cx::new(1.0, 0.0), row.beta, row.lambda, row.z0)?;
        let family = vg_boundary_closed_form(&pf, 256)?;

        for (label, boundary) in [("P", parent), ("G", family)] {
            let curve = match boundary {
                RegionBoundary::Curve(c) => c,
                RegionBoundary::Point(_) => unreachable!("reference rows have |lambda| < 1"),
            };
            let doc = OutputDocument::new(Payload::Curve {
                thetas: curve.thetas,
                points: curve.points,
            })
            .with_meta("row", row.index.to_string())
            .with_meta("class", label);

            let stem = dir.join(format!("table1_row{}_{label}", row.index));
            std::fs::write(stem.with_extension("csv"), doc.to_csv()).unwrap();
            std::fs::write(stem.with_extension("json"), doc.to_json()).unwrap();
            std::fs::write(stem.with_extension("svg"), doc.to_svg()?).unwrap();
            written += 3;
        }
    }
    println!("\nwrote {written} files under {}", dir.display());
    Ok(())
}
