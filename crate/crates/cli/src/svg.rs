//! SVG rendering of 2-D unit spheres with optional overlays: conjugate
//! diameter chords, flat-segment witnesses, and orthogonal-companion arrows.
//! Write-only output, viewBox [−1.6, 1.6]², coordinates at 6 decimals.

use mgeo_core::convexity::strict_convexity_probe;
use mgeo_core::orthogonality::orthogonal_companion_2d;
use mgeo_core::planar::find_conjugate_diameters;
use mgeo_core::spaces::{sphere_point_2d, NormedSpace, Vector};
use mgeo_core::Error;
use std::f64::consts::TAU;
use std::fmt::Write as _;

/// Number of polyline samples around the sphere.
pub const SPHERE_SAMPLES: usize = 2048;

fn fmt_pt(out: &mut String, v: &Vector) {
    // SVG's y axis points down; flip so the plot reads mathematically
    let _ = write!(out, "{:.6},{:.6} ", v.coords()[0], -v.coords()[1]);
}

fn line(out: &mut String, a: &Vector, b: &Vector, stroke: &str, width: f64) {
    let _ = writeln!(
        out,
        r#"  <line x1="{:.6}" y1="{:.6}" x2="{:.6}" y2="{:.6}" stroke="{stroke}" stroke-width="{width}" />"#,
        a.coords()[0],
        -a.coords()[1],
        b.coords()[0],
        -b.coords()[1],
    );
}

/// Renders the sphere polyline plus requested overlays.
pub fn sphere_svg(
    space: &NormedSpace,
    overlays: &[&str],
    companion_base: Option<&Vector>,
) -> Result<String, Error> {
    for o in overlays {
        if !matches!(*o, "conjugate" | "flats" | "companion") {
            return Err(Error::InvalidParameter(format!("unknown overlay {o:?}")));
        }
    }

    let mut out = String::new();
    out.push_str(
        r##"<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.6 -1.6 3.2 3.2">
  <rect x="-1.6" y="-1.6" width="3.2" height="3.2" fill="white" />
  <line x1="-1.6" y1="0" x2="1.6" y2="0" stroke="#dddddd" stroke-width="0.01" />
  <line x1="0" y1="-1.6" x2="0" y2="1.6" stroke="#dddddd" stroke-width="0.01" />
"##,
    );

    out.push_str("  <polyline fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"0.015\" points=\"");
    for k in 0..=SPHERE_SAMPLES {
        let theta = TAU * (k % SPHERE_SAMPLES) as f64 / SPHERE_SAMPLES as f64;
        let p = sphere_point_2d(space, theta)?;
        fmt_pt(&mut out, &p);
    }
    out.push_str("\" />\n");

    if overlays.contains(&"conjugate") {
        let search = find_conjugate_diameters(space, 360, 1e-6)?;
        for pair in search.pairs.iter().take(4) {
            line(&mut out, &pair.x.scale(-1.0), &pair.x, "#c03030", 0.012);
            line(&mut out, &pair.y.scale(-1.0), &pair.y, "#3060c0", 0.012);
        }
    }

    if overlays.contains(&"flats") {
        let probe = strict_convexity_probe(space, 10_000, 1e-9, 0.05, 0);
        if let Some((u, v)) = &probe.flat_witness {
            line(&mut out, u, v, "#20a060", 0.02);
            line(&mut out, &u.scale(-1.0), &v.scale(-1.0), "#20a060", 0.02);
        }
    }

    if overlays.contains(&"companion") {
        if let Some(base) = companion_base {
            let x = space.normalize(base)?;
            let y = orthogonal_companion_2d(space, &x)?;
            line(&mut out, &Vector::xy(0.0, 0.0)?, &x, "#c03030", 0.012);
            line(&mut out, &Vector::xy(0.0, 0.0)?, &y, "#3060c0", 0.012);
            // arrowhead on the companion
            let tip = &y;
            let back = y.scale(0.92);
            let n = Vector::xy(-y.coords()[1], y.coords()[0])?.scale(0.03);
            line(&mut out, &back.add(&n), tip, "#3060c0", 0.012);
            line(&mut out, &back.sub(&n), tip, "#3060c0", 0.012);
        } else {
            return Err(Error::InvalidParameter(
                "companion overlay needs --x".into(),
            ));
        }
    }

    out.push_str("</svg>\n");
    Ok(out)
}
