//! JSON space-definition files.
//!
//! Four forms are accepted, discriminated by `"type"`:
//!
//! ```json
//! {"type":"lp","p":2.5,"dim":3}
//! {"type":"polyhedral","functionals":[[1,0],[0,1],[0.7,0.7]]}
//! {"type":"gauge2d","pieces":[...],"symmetric":true}
//! {"type":"builtin","name":"stadium"}
//! ```
//!
//! Unknown fields are rejected. Any form may carry an optional
//! `"basis": [[...],[...]]` used by the basis commands. Gauge boundaries are
//! accepted as unit spheres only after the convexity walk passes.

use super::{builtin_space, BoundaryPiece, Gauge2DBoundary, NormedSpace, Vector};
use crate::error::Error;
use serde::Deserialize;
use std::path::Path;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpaceFile {
    #[serde(rename = "type")]
    kind: String,
    p: Option<f64>,
    dim: Option<usize>,
    functionals: Option<Vec<Vec<f64>>>,
    pieces: Option<Vec<BoundaryPiece>>,
    symmetric: Option<bool>,
    name: Option<String>,
    basis: Option<Vec<Vec<f64>>>,
}

/// A parsed space-definition file: the space plus an optional inline basis.
#[derive(Debug, Clone)]
pub struct SpaceFile {
    pub space: NormedSpace,
    pub basis: Option<Vec<Vector>>,
}

/// Parses a space definition from JSON text.
pub fn space_from_json(text: &str) -> Result<SpaceFile, Error> {
    let raw: RawSpaceFile =
        serde_json::from_str(text).map_err(|e| Error::BadSpaceFile(e.to_string()))?;

    let reject = |field: &str, kind: &str| -> Error {
        Error::BadSpaceFile(format!("field {field:?} is not valid for type {kind:?}"))
    };

    let space = match raw.kind.as_str() {
        "lp" => {
            if raw.functionals.is_some() || raw.pieces.is_some() || raw.symmetric.is_some() {
                return Err(reject("functionals/pieces/symmetric", "lp"));
            }
            if raw.name.is_some() {
                return Err(reject("name", "lp"));
            }
            let p = raw
                .p
                .ok_or_else(|| Error::BadSpaceFile("type \"lp\" requires \"p\"".into()))?;
            let dim = raw
                .dim
                .ok_or_else(|| Error::BadSpaceFile("type \"lp\" requires \"dim\"".into()))?;
            NormedSpace::lp(p, dim)?
        }
        "polyhedral" => {
            if raw.p.is_some() || raw.pieces.is_some() || raw.symmetric.is_some() {
                return Err(reject("p/pieces/symmetric", "polyhedral"));
            }
            if raw.name.is_some() {
                return Err(reject("name", "polyhedral"));
            }
            let functionals = raw.functionals.ok_or_else(|| {
                Error::BadSpaceFile("type \"polyhedral\" requires \"functionals\"".into())
            })?;
            let functionals = functionals
                .into_iter()
                .map(Vector::new)
                .collect::<Result<Vec<_>, _>>()?;
            let space = NormedSpace::polyhedral(functionals)?;
            if let Some(dim) = raw.dim {
                if dim != space.dim() {
                    return Err(Error::BadSpaceFile(format!(
                        "declared dim {dim} does not match functionals of dim {}",
                        space.dim()
                    )));
                }
            }
            space
        }
        "gauge2d" => {
            if raw.p.is_some() || raw.functionals.is_some() || raw.name.is_some() {
                return Err(reject("p/functionals/name", "gauge2d"));
            }
            if raw.dim.is_some_and(|d| d != 2) {
                return Err(Error::BadSpaceFile("gauge2d spaces are 2-D".into()));
            }
            let pieces = raw.pieces.ok_or_else(|| {
                Error::BadSpaceFile("type \"gauge2d\" requires \"pieces\"".into())
            })?;
            let symmetric = raw.symmetric.ok_or_else(|| {
                Error::BadSpaceFile("type \"gauge2d\" requires \"symmetric\"".into())
            })?;
            let space = NormedSpace::gauge2d(Gauge2DBoundary { pieces, symmetric })?;
            super::accept_gauge(&space)?;
            space
        }
        "builtin" => {
            if raw.p.is_some()
                || raw.functionals.is_some()
                || raw.pieces.is_some()
                || raw.symmetric.is_some()
            {
                return Err(reject("p/functionals/pieces/symmetric", "builtin"));
            }
            let name = raw
                .name
                .ok_or_else(|| Error::BadSpaceFile("type \"builtin\" requires \"name\"".into()))?;
            let name = match raw.dim {
                Some(d) => format!("{name},dim={d}"),
                None => name,
            };
            builtin_space(&name)?
        }
        other => {
            return Err(Error::BadSpaceFile(format!(
                "unknown space type {other:?}"
            )))
        }
    };

    let basis = match raw.basis {
        Some(rows) => Some(
            rows.into_iter()
                .map(Vector::new)
                .collect::<Result<Vec<_>, _>>()?,
        ),
        None => None,
    };

    Ok(SpaceFile { space, basis })
}

/// Reads and parses a space-definition file.
pub fn space_from_path(path: &Path) -> Result<SpaceFile, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::BadSpaceFile(format!("{}: {e}", path.display())))?;
    let mut parsed = space_from_json(&text)?;
    if parsed.space.label() == "gauge2d" {
        let label = format!("gauge2d {}", path.display());
        parsed.space.set_label(label);
    }
    Ok(parsed)
}
