//! JSON documents for algebras, modules, representations and groups.
//!
//! Rationals are always strings (`"-3/4"`), so documents survive tools that
//! coerce numbers to floats.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{clifford_example, matsuo_system, Algebra, AlgebraError, AxialAlgebra, FusionRule};
use crate::exactlin::{format_rational, format_vector, parse_rational, LinError, Matrix, Rational, Vector};
use crate::geometry::{catalog_by_name, GeometryDoc, GeometryError, PointLineGeometry, TripleSystem};
use crate::groups::{enumerate, EnumeratedGroup, GroupError, Permutation, DEFAULT_ENUMERATION_CAP};
use crate::modules::{AlgebraModule, GroupRepresentation, ModuleError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unrecognised document: {0}")]
    Unrecognised(String),
    #[error("missing entry for {0}")]
    Missing(String),
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleDoc {
    pub eigenvalues: Vec<String>,
    /// Keys are `"φ,ψ"`; missing pairs mean the empty set.
    pub star: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plus: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minus: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub basis: Vec<String>,
    pub products: Vec<Vec<Vec<String>>>,
    pub axes: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub axis_labels: Option<Vec<String>>,
    pub rule: RuleDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatsuoDoc {
    pub geometry: GeometryDoc,
    pub alpha: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDoc {
    pub dim: usize,
    pub actions: BTreeMap<String, Matrix>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationDoc {
    pub dim: usize,
    pub images: BTreeMap<String, Matrix>,
}

/// A permutation group on `degree` points; `d` defaults to the union of the
/// conjugacy classes of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
    pub kind: String,
    pub degree: usize,
    pub generators: BTreeMap<String, Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Vec<String>>,
}

fn parse_vector(v: &[String]) -> Result<Vector, LinError> {
    v.iter().map(|s| parse_rational(s)).collect()
}

pub fn rule_to_doc(rule: &FusionRule) -> RuleDoc {
    let ev = rule.eigenvalues();
    let mut star = BTreeMap::new();
    for i in 0..ev.len() {
        for j in i..ev.len() {
            let set = rule.star(i, j);
            if !set.is_empty() {
                let key = format!("{},{}", format_rational(&ev[i]), format_rational(&ev[j]));
                star.insert(key, set.iter().map(|&k| format_rational(&ev[k])).collect());
            }
        }
    }
    let (plus, minus) = match rule.grading() {
        Some(g) => (
            Some(g.plus.iter().map(|&k| format_rational(&ev[k])).collect()),
            Some(g.minus.iter().map(|&k| format_rational(&ev[k])).collect()),
        ),
        None => (None, None),
    };
    RuleDoc { eigenvalues: ev.iter().map(format_rational).collect(), star, plus, minus }
}

pub fn rule_from_doc(doc: &RuleDoc) -> Result<FusionRule, IoError> {
    let eigenvalues = parse_vector(&doc.eigenvalues)?;
    let mut star = Vec::new();
    for (key, set) in &doc.star {
        let (a, b) = key.split_once(',').ok_or_else(|| IoError::Unrecognised(format!("star key {key}")))?;
        star.push((parse_rational(a.trim())?, parse_rational(b.trim())?, parse_vector(set)?));
    }
    let grading = match (&doc.plus, &doc.minus) {
        (Some(p), Some(m)) => Some((parse_vector(p)?, parse_vector(m)?)),
        (None, None) => None,
        _ => return Err(IoError::Unrecognised("grading needs both plus and minus".into())),
    };
    Ok(FusionRule::new(eigenvalues, &star, grading)?)
}

pub fn algebra_to_doc(aa: &AxialAlgebra) -> AlgebraDoc {
    let a = aa.algebra();
    AlgebraDoc {
        basis: a.basis_labels().to_vec(),
        products: a.products().iter().map(|row| row.iter().map(|v| format_vector(v)).collect()).collect(),
        axes: aa.axes().iter().map(|v| format_vector(v)).collect(),
        axis_labels: Some(aa.axis_labels().to_vec()),
        rule: rule_to_doc(aa.rule()),
    }
}

pub fn algebra_from_doc(doc: &AlgebraDoc) -> Result<AxialAlgebra, IoError> {
    let products = doc
        .products
        .iter()
        .map(|row| row.iter().map(|v| parse_vector(v)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    let algebra = Algebra::new(doc.basis.clone(), products)?;
    let axes = doc.axes.iter().map(|v| parse_vector(v)).collect::<Result<Vec<_>, _>>()?;
    let labels = doc.axis_labels.clone().unwrap_or_else(|| (0..axes.len()).map(|i| format!("e{}", i + 1)).collect());
    Ok(AxialAlgebra::new(algebra, axes, labels, rule_from_doc(&doc.rule)?)?)
}

pub fn matsuo_from_doc(doc: &MatsuoDoc) -> Result<AxialAlgebra, IoError> {
    let ts = TripleSystem::new(PointLineGeometry::from_doc(&doc.geometry)?)?;
    Ok(matsuo_system(&ts, &parse_rational(&doc.alpha)?)?)
}

pub fn module_to_doc(m: &AlgebraModule, aa: &AxialAlgebra) -> ModuleDoc {
    let actions = aa.algebra().basis_labels().iter().cloned().zip(m.actions().iter().cloned()).collect();
    ModuleDoc { dim: m.dim(), actions }
}

pub fn module_from_doc(doc: &ModuleDoc, aa: &AxialAlgebra) -> Result<AlgebraModule, IoError> {
    let actions = aa
        .algebra()
        .basis_labels()
        .iter()
        .map(|l| doc.actions.get(l).cloned().ok_or_else(|| IoError::Missing(l.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AlgebraModule::new(doc.dim, actions)?)
}

pub fn representation_to_doc(rho: &GroupRepresentation) -> RepresentationDoc {
    RepresentationDoc {
        dim: rho.dim(),
        images: rho.labels().iter().cloned().zip(rho.images().iter().cloned()).collect(),
    }
}

/// Images are taken in the order of `labels` (the generators of `U`).
pub fn representation_from_doc(doc: &RepresentationDoc, labels: &[String]) -> Result<GroupRepresentation, IoError> {
    let images = labels
        .iter()
        .map(|l| doc.images.get(l).cloned().ok_or_else(|| IoError::Missing(l.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GroupRepresentation::new(doc.dim, labels.to_vec(), images)?)
}

/// Builds the permutation group of a [`GroupDoc`] together with its class `D`
/// (element indices); the 3-transposition conditions are not checked here.
pub fn group_from_doc(doc: &GroupDoc) -> Result<(EnumeratedGroup<Permutation>, Vec<usize>), IoError> {
    if doc.kind != "permutation" {
        return Err(IoError::Unrecognised(format!("group kind {}", doc.kind)));
    }
    let gens = doc
        .generators
        .iter()
        .map(|(l, images)| {
            if images.len() != doc.degree {
                return Err(IoError::Group(GroupError::DomainMismatch));
            }
            Ok((l.clone(), Permutation::from_images(images.clone())?))
        })
        .collect::<Result<Vec<_>, IoError>>()?;
    let labels: Vec<String> = gens.iter().map(|(l, _)| l.clone()).collect();
    let group = enumerate(Permutation::identity(doc.degree), gens, DEFAULT_ENUMERATION_CAP)?;
    let table = group.table();
    let seeds: Vec<usize> = match &doc.d {
        Some(d) => d
            .iter()
            .map(|l| {
                labels
                    .iter()
                    .position(|x| x == l)
                    .map(|g| table.generator(g))
                    .ok_or_else(|| IoError::Missing(l.clone()))
            })
            .collect::<Result<_, _>>()?,
        None => (0..labels.len()).map(|g| table.generator(g)).collect(),
    };
    let mut d: Vec<usize> = Vec::new();
    for s in seeds {
        for c in table.conjugacy_class(s) {
            if !d.contains(&c) {
                d.push(c);
            }
        }
    }
    Ok((group, d))
}

/// An axial algebra read from any supported source.
pub enum AlgebraSource {
    Explicit(AlgebraDoc),
    Matsuo(MatsuoDoc),
    Geometry(GeometryDoc),
}

/// Parses JSON text into the kind of document it looks like.
pub fn parse_algebra_source(text: &str) -> Result<AlgebraSource, IoError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("basis").is_some() {
        Ok(AlgebraSource::Explicit(serde_json::from_value(value)?))
    } else if value.get("geometry").is_some() {
        Ok(AlgebraSource::Matsuo(serde_json::from_value(value)?))
    } else if value.get("points").is_some() {
        Ok(AlgebraSource::Geometry(serde_json::from_value(value)?))
    } else {
        Err(IoError::Unrecognised("expected an algebra, Matsuo or geometry document".into()))
    }
}

/// Resolves a built-in name: catalog geometries, the sample geometries and
/// `clifford`.
pub fn named_algebra(name: &str, alpha: Option<&Rational>) -> Result<Option<AxialAlgebra>, IoError> {
    if name == "clifford" {
        return Ok(Some(clifford_example()));
    }
    match named_geometry(name)? {
        Some(g) => {
            let alpha = alpha.ok_or_else(|| IoError::Missing("alpha".into()))?;
            Ok(Some(matsuo_system(&TripleSystem::new(g)?, alpha)?))
        }
        None => Ok(None),
    }
}

/// Catalog spaces (`dual_affine_2`, `affine_3`, `single_line`,
/// `sym_transpositions:N`) and sample geometries (`pencil`,
/// `two_disjoint_lines`, `line_with_isolated_point`, `single_point`).
pub fn named_geometry(name: &str) -> Result<Option<PointLineGeometry>, IoError> {
    use crate::geometry::{line_with_isolated_point, pencil, single_point, two_disjoint_lines};
    let g = match name {
        "pencil" => pencil(),
        "two_disjoint_lines" => two_disjoint_lines(),
        "line_with_isolated_point" => line_with_isolated_point(),
        "single_point" => single_point(),
        _ => match catalog_by_name(name) {
            Ok(fs) => fs.geometry().clone(),
            Err(GeometryError::UnknownName(_)) => return Ok(None),
            Err(e) => return Err(e.into()),
        },
    };
    Ok(Some(g))
}
