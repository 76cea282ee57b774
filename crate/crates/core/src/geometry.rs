//! Point-line geometries, partial triple systems and Fischer spaces.
//!
//! Lines are sets of points. The defining text of a point-line geometry
//! literally makes lines subsets of the line set and a subspace satisfy
//! `L ⊆ L'`; both are read here as the evident intent: lines are subsets of the
//! point set, and a subspace `(P', L')` has `P' ⊆ P`, `L' ⊆ L`, every line of
//! `L'` inside `P'`, and every line of `L` meeting `P'` in two points lies in
//! `L'`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactlin::{Matrix, Rational};
use crate::groups::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("duplicate point label {0:?}")]
    DuplicatePoint(String),
    #[error("unknown point {0:?}")]
    UnknownPoint(String),
    #[error("unknown line index {0}")]
    UnknownLine(usize),
    #[error("duplicate line {0:?}")]
    DuplicateLine(Vec<String>),
    #[error("line {0:?} repeats a point")]
    RepeatedPointOnLine(Vec<String>),
    #[error("not a partial triple system: {0}")]
    NotPartialTripleSystem(TripleSystemViolation),
    #[error("not a Fischer space: {0}")]
    NotFischer(FischerViolation),
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("bad catalog parameter: {0}")]
    BadParameter(String),
}

/// A finite point-line geometry with labelled points. Points are kept in input
/// order; every matrix indexed by points uses this order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointLineGeometry {
    points: Vec<String>,
    lines: Vec<Vec<usize>>,
}

/// JSON form: `{"points": [...], "lines": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometryDoc {
    pub points: Vec<String>,
    pub lines: Vec<Vec<String>>,
}

impl PointLineGeometry {
    pub fn new<S: Into<String>>(points: Vec<S>, lines: Vec<Vec<S>>) -> Result<Self, GeometryError> {
        let points: Vec<String> = points.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, p) in points.iter().enumerate() {
            if index.insert(p.clone(), i).is_some() {
                return Err(GeometryError::DuplicatePoint(p.clone()));
            }
        }
        let mut idx_lines = Vec::with_capacity(lines.len());
        for line in lines {
            let labels: Vec<String> = line.into_iter().map(Into::into).collect();
            let mut l = Vec::with_capacity(labels.len());
            for p in &labels {
                l.push(*index.get(p).ok_or_else(|| GeometryError::UnknownPoint(p.clone()))?);
            }
            idx_lines.push(l);
        }
        Self::from_indices(points, idx_lines)
    }

    pub fn from_indices(points: Vec<String>, lines: Vec<Vec<usize>>) -> Result<Self, GeometryError> {
        let mut seen = HashSet::new();
        for p in &points {
            if !seen.insert(p) {
                return Err(GeometryError::DuplicatePoint(p.clone()));
            }
        }
        let mut normalised = Vec::with_capacity(lines.len());
        let mut line_set = HashSet::new();
        for mut l in lines {
            if let Some(&bad) = l.iter().find(|&&i| i >= points.len()) {
                return Err(GeometryError::UnknownPoint(bad.to_string()));
            }
            let labels: Vec<String> = l.iter().map(|&i| points[i].clone()).collect();
            let before = l.len();
            l.sort_unstable();
            l.dedup();
            if l.len() != before {
                return Err(GeometryError::RepeatedPointOnLine(labels));
            }
            if !line_set.insert(l.clone()) {
                return Err(GeometryError::DuplicateLine(labels));
            }
            normalised.push(l);
        }
        Ok(PointLineGeometry { points, lines: normalised })
    }

    pub fn empty() -> Self {
        PointLineGeometry { points: Vec::new(), lines: Vec::new() }
    }

    pub fn from_doc(doc: &GeometryDoc) -> Result<Self, GeometryError> {
        Self::new(doc.points.clone(), doc.lines.clone())
    }

    pub fn to_doc(&self) -> GeometryDoc {
        GeometryDoc { points: self.points.clone(), lines: (0..self.lines.len()).map(|i| self.line_labels(i)).collect() }
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    /// Lines as sorted point indices.
    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn point_index(&self, label: &str) -> Option<usize> {
        self.points.iter().position(|p| p == label)
    }

    pub fn require_point(&self, label: &str) -> Result<usize, GeometryError> {
        self.point_index(label).ok_or_else(|| GeometryError::UnknownPoint(label.to_string()))
    }

    pub fn line_labels(&self, i: usize) -> Vec<String> {
        self.lines[i].iter().map(|&p| self.points[p].clone()).collect()
    }

    /// Distinct points sharing a line.
    pub fn collinear(&self, x: usize, y: usize) -> bool {
        x != y && self.lines.iter().any(|l| l.contains(&x) && l.contains(&y))
    }

    pub fn isolated_points(&self) -> Vec<usize> {
        (0..self.num_points()).filter(|&x| (0..self.num_points()).all(|y| !self.collinear(x, y))).collect()
    }

    /// The sub-geometry on `points` (in original order) with the given lines.
    fn restrict(&self, points: &BTreeSet<usize>, lines: &BTreeSet<usize>) -> PointLineGeometry {
        let relabel: HashMap<usize, usize> = points.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let pts = points.iter().map(|&p| self.points[p].clone()).collect();
        let ls = lines.iter().map(|&l| self.lines[l].iter().map(|p| relabel[p]).collect()).collect();
        PointLineGeometry::from_indices(pts, ls).expect("restriction of a valid geometry")
    }

    /// `𝒢°`: the geometry with isolated points removed.
    pub fn without_isolated(&self) -> PointLineGeometry {
        let isolated: HashSet<usize> = self.isolated_points().into_iter().collect();
        let keep: BTreeSet<usize> = (0..self.num_points()).filter(|p| !isolated.contains(p)).collect();
        let lines: BTreeSet<usize> =
            (0..self.num_lines()).filter(|&l| self.lines[l].iter().all(|p| keep.contains(p))).collect();
        self.restrict(&keep, &lines)
    }

    /// Disjoint union; labels of `other` must not clash with ours.
    pub fn disjoint_union(&self, other: &PointLineGeometry) -> Result<PointLineGeometry, GeometryError> {
        let offset = self.num_points();
        let mut points = self.points.clone();
        points.extend(other.points.iter().cloned());
        let mut lines = self.lines.clone();
        lines.extend(other.lines.iter().map(|l| l.iter().map(|p| p + offset).collect()));
        PointLineGeometry::from_indices(points, lines)
    }
}

impl fmt::Display for PointLineGeometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} points, {} lines", self.num_points(), self.num_lines())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TripleSystemViolation {
    LineSize { line: Vec<String>, size: usize },
    SharedPair { first: Vec<String>, second: Vec<String>, pair: [String; 2] },
}

impl fmt::Display for TripleSystemViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::LineSize { line, size } => write!(f, "line {line:?} has {size} points"),
            Self::SharedPair { first, second, pair } => {
                write!(f, "lines {first:?} and {second:?} both contain {pair:?}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleSystemReport {
    pub ok: bool,
    pub witness: Option<TripleSystemViolation>,
}

pub fn validate_partial_triple_system(g: &PointLineGeometry) -> TripleSystemReport {
    for (i, l) in g.lines.iter().enumerate() {
        if l.len() != 3 {
            let witness = TripleSystemViolation::LineSize { line: g.line_labels(i), size: l.len() };
            return TripleSystemReport { ok: false, witness: Some(witness) };
        }
    }
    let mut owner: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, l) in g.lines.iter().enumerate() {
        for a in 0..3 {
            for b in a + 1..3 {
                if let Some(&j) = owner.get(&(l[a], l[b])) {
                    let witness = TripleSystemViolation::SharedPair {
                        first: g.line_labels(j),
                        second: g.line_labels(i),
                        pair: [g.points[l[a]].clone(), g.points[l[b]].clone()],
                    };
                    return TripleSystemReport { ok: false, witness: Some(witness) };
                }
                owner.insert((l[a], l[b]), i);
            }
        }
    }
    TripleSystemReport { ok: true, witness: None }
}

fn closure(g: &PointLineGeometry, seed_points: &[usize], seed_lines: &[usize]) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let mut points: BTreeSet<usize> = seed_points.iter().copied().collect();
    let mut lines: BTreeSet<usize> = seed_lines.iter().copied().collect();
    for &l in seed_lines {
        points.extend(g.lines[l].iter().copied());
    }
    loop {
        let mut changed = false;
        for (i, l) in g.lines.iter().enumerate() {
            if lines.contains(&i) {
                continue;
            }
            if l.iter().filter(|p| points.contains(p)).count() >= 2 {
                lines.insert(i);
                points.extend(l.iter().copied());
                changed = true;
            }
        }
        if !changed {
            return (points, lines);
        }
    }
}

/// The smallest subspace containing the given points and lines.
pub fn generated_subspace(
    g: &PointLineGeometry,
    seed_points: &[&str],
    seed_lines: &[usize],
) -> Result<PointLineGeometry, GeometryError> {
    let pts = seed_points.iter().map(|p| g.require_point(p)).collect::<Result<Vec<_>, _>>()?;
    if let Some(&bad) = seed_lines.iter().find(|&&l| l >= g.num_lines()) {
        return Err(GeometryError::UnknownLine(bad));
    }
    let (p, l) = closure(g, &pts, seed_lines);
    Ok(g.restrict(&p, &l))
}

/// Exhaustive backtracking search for a point bijection mapping lines onto
/// lines. Exponential; intended for the handful-of-points geometries that
/// arise as generated subspaces and catalog checks.
pub fn isomorphism(a: &PointLineGeometry, b: &PointLineGeometry) -> Option<Vec<usize>> {
    if a.num_points() != b.num_points() || a.num_lines() != b.num_lines() {
        return None;
    }
    let mut sizes_a: Vec<usize> = a.lines.iter().map(Vec::len).collect();
    let mut sizes_b: Vec<usize> = b.lines.iter().map(Vec::len).collect();
    sizes_a.sort_unstable();
    sizes_b.sort_unstable();
    if sizes_a != sizes_b {
        return None;
    }
    let n = a.num_points();
    let b_lines: HashSet<Vec<usize>> = b.lines.iter().cloned().collect();
    // lines of `a` indexed by their largest point, checked once fully assigned
    let mut completed_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, l) in a.lines.iter().enumerate() {
        if let Some(&last) = l.last() {
            completed_at[last].push(i);
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        p: usize,
        a: &PointLineGeometry,
        b: &PointLineGeometry,
        b_lines: &HashSet<Vec<usize>>,
        completed_at: &[Vec<usize>],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let n = map.len();
        if p == n {
            return true;
        }
        for q in 0..n {
            if used[q] {
                continue;
            }
            let consistent = (0..p).all(|r| a.collinear(r, p) == b.collinear(map[r], q));
            if !consistent {
                continue;
            }
            map[p] = q;
            used[q] = true;
            let lines_ok = completed_at[p].iter().all(|&li| {
                let mut img: Vec<usize> = a.lines[li].iter().map(|&x| map[x]).collect();
                img.sort_unstable();
                b_lines.contains(&img)
            });
            if lines_ok && extend(p + 1, a, b, b_lines, completed_at, map, used) {
                return true;
            }
            used[q] = false;
            map[p] = usize::MAX;
        }
        false
    }

    extend(0, a, b, &b_lines, &completed_at, &mut map, &mut used).then_some(map)
}

/// Checks that `map` (point index of `a` ↦ point index of `b`) is a bijection
/// inducing a bijection between the line sets.
pub fn is_isomorphism(a: &PointLineGeometry, b: &PointLineGeometry, map: &[usize]) -> bool {
    if map.len() != a.num_points() || a.num_points() != b.num_points() || a.num_lines() != b.num_lines() {
        return false;
    }
    let mut hit = vec![false; b.num_points()];
    for &m in map {
        if m >= hit.len() || hit[m] {
            return false;
        }
        hit[m] = true;
    }
    let b_lines: HashSet<Vec<usize>> = b.lines.iter().cloned().collect();
    let mut images = HashSet::new();
    for l in &a.lines {
        let mut img: Vec<usize> = l.iter().map(|&x| map[x]).collect();
        img.sort_unstable();
        if !b_lines.contains(&img) || !images.insert(img) {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FischerViolation {
    pub first: Vec<String>,
    pub second: Vec<String>,
    pub subspace_points: usize,
    pub subspace_lines: usize,
}

impl fmt::Display for FischerViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lines {:?} and {:?} generate a subspace with {} points and {} lines",
            self.first, self.second, self.subspace_points, self.subspace_lines
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FischerReport {
    pub ok: bool,
    pub witness: Option<FischerViolation>,
}

/// Every pair of distinct intersecting lines must generate a copy of the
/// dual affine plane of order 2 or the affine plane of order 3.
pub fn is_fischer_space(g: &PointLineGeometry) -> Result<FischerReport, GeometryError> {
    if let Some(v) = validate_partial_triple_system(g).witness {
        return Err(GeometryError::NotPartialTripleSystem(v));
    }
    let templates = [dual_affine_plane_2(), affine_plane_3()];
    for i in 0..g.num_lines() {
        for j in i + 1..g.num_lines() {
            if !g.lines[i].iter().any(|p| g.lines[j].contains(p)) {
                continue;
            }
            let (p, l) = closure(g, &[], &[i, j]);
            let sub = g.restrict(&p, &l);
            if !templates.iter().any(|t| isomorphism(&sub, t).is_some()) {
                let witness = FischerViolation {
                    first: g.line_labels(i),
                    second: g.line_labels(j),
                    subspace_points: sub.num_points(),
                    subspace_lines: sub.num_lines(),
                };
                return Ok(FischerReport { ok: false, witness: Some(witness) });
            }
        }
    }
    Ok(FischerReport { ok: true, witness: None })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub components: Vec<PointLineGeometry>,
    pub isolated: Vec<String>,
}

/// Classes of the connectivity relation, as generated subspaces; isolated
/// points are reported separately and not as components.
pub fn connected_components(g: &PointLineGeometry) -> Components {
    let n = g.num_points();
    let mut adj = vec![Vec::new(); n];
    for l in &g.lines {
        for &a in l {
            for &b in l {
                if a != b {
                    adj[a].push(b);
                }
            }
        }
    }
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    let mut isolated = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        if adj[start].is_empty() {
            seen[start] = true;
            isolated.push(g.points[start].clone());
            continue;
        }
        let mut class = BTreeSet::new();
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(x) = queue.pop_front() {
            class.insert(x);
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        let seeds: Vec<usize> = class.iter().copied().collect();
        let (p, l) = closure(g, &seeds, &[]);
        components.push(g.restrict(&p, &l));
    }
    Components { components, isolated }
}

/// A validated partial triple system with its wedge map `x∧y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleSystem {
    geometry: PointLineGeometry,
    wedge: Vec<Vec<Option<usize>>>,
}

impl TripleSystem {
    pub fn new(geometry: PointLineGeometry) -> Result<Self, GeometryError> {
        if let Some(v) = validate_partial_triple_system(&geometry).witness {
            return Err(GeometryError::NotPartialTripleSystem(v));
        }
        let n = geometry.num_points();
        let mut wedge = vec![vec![None; n]; n];
        for l in &geometry.lines {
            let (a, b, c) = (l[0], l[1], l[2]);
            wedge[a][b] = Some(c);
            wedge[b][a] = Some(c);
            wedge[a][c] = Some(b);
            wedge[c][a] = Some(b);
            wedge[b][c] = Some(a);
            wedge[c][b] = Some(a);
        }
        Ok(TripleSystem { geometry, wedge })
    }

    pub fn geometry(&self) -> &PointLineGeometry {
        &self.geometry
    }

    pub fn num_points(&self) -> usize {
        self.geometry.num_points()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.geometry.points[x]
    }

    pub fn collinear(&self, x: usize, y: usize) -> bool {
        self.wedge[x][y].is_some()
    }

    /// Third point on the line through `x` and `y`.
    pub fn wedge(&self, x: usize, y: usize) -> Option<usize> {
        self.wedge[x][y]
    }

    pub fn neighbours(&self, x: usize) -> Vec<usize> {
        (0..self.num_points()).filter(|&y| self.collinear(x, y)).collect()
    }

    pub fn is_isolated(&self, x: usize) -> bool {
        self.wedge[x].iter().all(Option::is_none)
    }

    pub fn has_isolated_points(&self) -> bool {
        (0..self.num_points()).any(|x| self.is_isolated(x))
    }

    pub fn lines_through(&self, x: usize) -> usize {
        self.neighbours(x).len() / 2
    }

    /// `y ↦ x∧y` on points collinear with `x`, identity elsewhere.
    pub fn tau(&self, x: usize) -> Permutation {
        let images = (0..self.num_points()).map(|y| self.wedge[x][y].unwrap_or(y)).collect();
        Permutation::from_images(images).expect("tau is a bijection")
    }

    pub fn collinearity_matrix(&self) -> Matrix {
        let n = self.num_points();
        let mut a = Matrix::zeros(n, n);
        for x in 0..n {
            for y in 0..n {
                if self.collinear(x, y) {
                    a.set(x, y, Rational::one());
                }
            }
        }
        a
    }

    /// Connected with at least one point (a lone point counts as connected).
    pub fn is_connected(&self) -> bool {
        let n = self.num_points();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for y in self.neighbours(x) {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// A partial triple system verified to be a Fischer space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FischerSpace {
    system: TripleSystem,
}

impl FischerSpace {
    pub fn new(geometry: PointLineGeometry) -> Result<Self, GeometryError> {
        let report = is_fischer_space(&geometry)?;
        if let Some(v) = report.witness {
            return Err(GeometryError::NotFischer(v));
        }
        Ok(FischerSpace { system: TripleSystem::new(geometry)? })
    }

    pub fn system(&self) -> &TripleSystem {
        &self.system
    }
}

impl std::ops::Deref for FischerSpace {
    type Target = TripleSystem;

    fn deref(&self) -> &TripleSystem {
        &self.system
    }
}

pub fn point_tau(fs: &FischerSpace, x: &str) -> Result<Permutation, GeometryError> {
    Ok(fs.tau(fs.geometry().require_point(x)?))
}

pub fn collinearity_matrix(fs: &FischerSpace) -> Matrix {
    fs.collinearity_matrix()
}

/// Built-in Fischer spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogName {
    DualAffine2,
    Affine3,
    SingleLine,
    SymTranspositions,
}

impl FromStr for CatalogName {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dual_affine_2" => Ok(Self::DualAffine2),
            "affine_3" => Ok(Self::Affine3),
            "single_line" => Ok(Self::SingleLine),
            "sym_transpositions" => Ok(Self::SymTranspositions),
            _ => Err(GeometryError::UnknownName(s.to_string())),
        }
    }
}

pub fn catalog(name: CatalogName, n: Option<usize>) -> Result<FischerSpace, GeometryError> {
    let g = match (name, n) {
        (CatalogName::SymTranspositions, Some(n)) if n >= 3 => sym_transpositions(n),
        (CatalogName::SymTranspositions, Some(n)) => {
            return Err(GeometryError::BadParameter(format!("sym_transpositions needs n >= 3, got {n}")))
        }
        (CatalogName::SymTranspositions, None) => {
            return Err(GeometryError::BadParameter("sym_transpositions needs n".into()))
        }
        (_, Some(_)) => return Err(GeometryError::BadParameter(format!("{name:?} takes no parameter"))),
        (CatalogName::DualAffine2, None) => dual_affine_plane_2(),
        (CatalogName::Affine3, None) => affine_plane_3(),
        (CatalogName::SingleLine, None) => single_line(),
    };
    FischerSpace::new(g)
}

/// Parses `dual_affine_2`, `affine_3`, `single_line`, `sym_transpositions:N`
/// (also `sym_transpositions(N)`).
pub fn catalog_by_name(name: &str) -> Result<FischerSpace, GeometryError> {
    let name = name.trim();
    if let Some(rest) = name.strip_prefix("sym_transpositions") {
        let digits = rest.trim_matches(|c| c == ':' || c == '(' || c == ')');
        if digits.is_empty() {
            return catalog(CatalogName::SymTranspositions, None);
        }
        let n = digits.parse().map_err(|_| GeometryError::BadParameter(digits.to_string()))?;
        return catalog(CatalogName::SymTranspositions, Some(n));
    }
    catalog(name.parse()?, None)
}

/// Complete quadrilateral: four lines, points are their pairwise meets.
pub fn dual_affine_plane_2() -> PointLineGeometry {
    PointLineGeometry::new(
        vec!["a", "b", "c", "d", "e", "f"],
        vec![vec!["a", "b", "c"], vec!["a", "d", "e"], vec!["b", "d", "f"], vec!["c", "e", "f"]],
    )
    .expect("static geometry")
}

/// `AG(2,3)`: points `ij` for `i, j ∈ Z/3`, 12 lines in 4 parallel classes.
pub fn affine_plane_3() -> PointLineGeometry {
    let label = |x: usize, y: usize| format!("{x}{y}");
    let points: Vec<String> = (0..9).map(|i| label(i / 3, i % 3)).collect();
    let mut lines = BTreeSet::new();
    for (dx, dy) in [(0, 1), (1, 0), (1, 1), (1, 2)] {
        for x in 0..3 {
            for y in 0..3 {
                let mut l: Vec<usize> = (0..3).map(|t| ((x + t * dx) % 3) * 3 + (y + t * dy) % 3).collect();
                l.sort_unstable();
                lines.insert(l);
            }
        }
    }
    PointLineGeometry::from_indices(points, lines.into_iter().collect()).expect("static geometry")
}

pub fn single_line() -> PointLineGeometry {
    PointLineGeometry::new(vec!["a", "b", "c"], vec![vec!["a", "b", "c"]]).expect("static geometry")
}

/// The geometry of transpositions of `S_n`: points are pairs `(i j)`, lines
/// the three transpositions inside a 3-subset.
pub fn sym_transpositions(n: usize) -> PointLineGeometry {
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            pairs.push((i, j));
        }
    }
    let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let mut lines = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                lines.push(vec![index[&(a, b)], index[&(a, c)], index[&(b, c)]]);
            }
        }
    }
    let points = pairs.iter().map(|(i, j)| format!("({i} {j})")).collect();
    PointLineGeometry::from_indices(points, lines).expect("static geometry")
}

/// Two lines through a common point: a partial triple system that is not a
/// Fischer space.
pub fn pencil() -> PointLineGeometry {
    PointLineGeometry::new(vec!["a", "b", "c", "d", "e"], vec![vec!["a", "b", "c"], vec!["a", "d", "e"]])
        .expect("static geometry")
}

pub fn two_disjoint_lines() -> PointLineGeometry {
    PointLineGeometry::new(vec!["a", "b", "c", "d", "e", "f"], vec![vec!["a", "b", "c"], vec!["d", "e", "f"]])
        .expect("static geometry")
}

pub fn line_with_isolated_point() -> PointLineGeometry {
    PointLineGeometry::new(vec!["a", "b", "c", "z"], vec![vec!["a", "b", "c"]]).expect("static geometry")
}

pub fn single_point() -> PointLineGeometry {
    PointLineGeometry::new(vec!["p"], Vec::<Vec<&str>>::new()).expect("static geometry")
}

/// Number of lines through each point, if constant.
pub fn constant_lines_per_point(ts: &TripleSystem) -> Option<usize> {
    let counts: BTreeSet<usize> = (0..ts.num_points()).map(|x| ts.lines_through(x)).collect();
    (counts.len() == 1).then(|| *counts.iter().next().unwrap())
}
