//! Finite groups given by generators, 3-transposition groups and the
//! Buekenhout correspondence with Fischer spaces.
//!
//! All actions are right actions: `x^(gh) = (x^g)^h`. A product `g·h` means
//! "first `g`, then `h`", for permutations and for matrices acting on row
//! vectors alike.
//!
//! Every group is ultimately stored as a [`FiniteGroup`]: the right Cayley
//! table on a generating set plus one witness word per element. Element
//! index 0 is always the identity and indices follow breadth-first order.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{miyamoto_matrix, AlgebraError, AxialAlgebra};
use crate::exactlin::Matrix;
use crate::geometry::{is_fischer_space, is_isomorphism, FischerSpace, GeometryError, PointLineGeometry};

/// Default safety cap for breadth-first enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GroupError {
    #[error("enumeration exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("element not found in group")]
    ElementNotFound,
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("generators act on different domains")]
    DomainMismatch,
    #[error("the fusion rule has no Z/2-grading")]
    NoGrading,
    #[error("axis set is not Miyamoto-closed: image of axis {axis} under tau_{by} is not an axis")]
    NotClosed { axis: String, by: String },
    #[error("the Fischer space has isolated points")]
    HasIsolatedPoints,
    #[error("the geometry is empty")]
    EmptyGeometry,
    #[error("not a 3-transposition group: {0}")]
    NotThreeTransposition(TtgViolation),
    #[error("Miyamoto involution of {0} is not a point permutation")]
    NotPointAction(String),
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// A bijection of `{0, …, n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(GroupError::NotAPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Transposition of `a` and `b` on `n` points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&i| other.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }
}

/// Elements that can be multiplied and hashed; enough for breadth-first
/// closure.
pub trait GroupElement: Clone + Eq + Hash {
    /// `self` then `other`.
    fn product(&self, other: &Self) -> Self;
}

impl GroupElement for Permutation {
    fn product(&self, other: &Self) -> Self {
        self.compose(other)
    }
}

impl GroupElement for Matrix {
    fn product(&self, other: &Self) -> Self {
        self.mul(other)
    }
}

/// A finite group as a right Cayley table on labelled generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    right: Vec<Vec<usize>>,
    words: Vec<Vec<usize>>,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Builds the group from a complete right-multiplication table in which
    /// row 0 is the identity. Rows are renumbered in breadth-first order from
    /// the identity, so equal tables give equal numberings.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = table.len();
        let k = labels.len();
        if table.iter().any(|row| row.len() != k || row.iter().any(|&c| c >= n)) {
            return Err(GroupError::Inconsistent("malformed Cayley table".into()));
        }
        let mut order = vec![usize::MAX; n];
        let mut seq = Vec::with_capacity(n);
        let mut words: Vec<Vec<usize>> = Vec::with_capacity(n);
        if n > 0 {
            order[0] = 0;
            seq.push(0);
            words.push(Vec::new());
        }
        let mut head = 0;
        while head < seq.len() {
            let old = seq[head];
            for g in 0..k {
                let next = table[old][g];
                if order[next] == usize::MAX {
                    order[next] = seq.len();
                    seq.push(next);
                    let mut w = words[head].clone();
                    w.push(g);
                    words.push(w);
                }
            }
            head += 1;
        }
        if seq.len() != n {
            return Err(GroupError::Inconsistent("Cayley table is not connected".into()));
        }
        let right: Vec<Vec<usize>> = seq.iter().map(|&old| table[old].iter().map(|&c| order[c]).collect()).collect();
        for g in 0..k {
            let mut hit = vec![false; n];
            for row in &right {
                if std::mem::replace(&mut hit[row[g]], true) {
                    return Err(GroupError::Inconsistent(format!("generator {} is not a bijection", labels[g])));
                }
            }
        }
        let mut group = FiniteGroup { labels, right, words, inverses: Vec::new() };
        group.inverses = group.compute_inverses();
        Ok(group)
    }

    fn compute_inverses(&self) -> Vec<usize> {
        let n = self.order();
        let k = self.labels.len();
        // inverse of a generator: the row mapped to the identity by its column
        let mut gen_inv = vec![0; k];
        for g in 0..k {
            gen_inv[g] = (0..n).find(|&c| self.right[c][g] == 0).expect("bijective column");
        }
        (0..n).map(|a| self.words[a].iter().rev().fold(0, |acc, &g| self.mul(acc, gen_inv[g]))).collect()
    }

    pub fn order(&self) -> usize {
        self.right.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generator_labels(&self) -> &[String] {
        &self.labels
    }

    pub fn num_generators(&self) -> usize {
        self.labels.len()
    }

    /// Element index of generator `g`.
    pub fn generator(&self, g: usize) -> usize {
        self.right[0][g]
    }

    pub fn right_table(&self) -> &[Vec<usize>] {
        &self.right
    }

    pub fn word(&self, a: usize) -> &[usize] {
        &self.words[a]
    }

    pub fn word_labels(&self, a: usize) -> Vec<String> {
        self.words[a].iter().map(|&g| self.labels[g].clone()).collect()
    }

    /// Element reached from `start` by right-multiplying along `word`.
    pub fn walk(&self, start: usize, word: &[usize]) -> usize {
        word.iter().fold(start, |c, &g| self.right[c][g])
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.walk(a, &self.words[b])
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `t⁻¹·a·t`
    pub fn conjugate(&self, a: usize, t: usize) -> usize {
        self.mul(self.mul(self.inverse(t), a), t)
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Elements commuting with every generator.
    pub fn center(&self) -> Vec<usize> {
        let gens: Vec<usize> = (0..self.num_generators()).map(|g| self.generator(g)).collect();
        (0..self.order()).filter(|&a| gens.iter().all(|&g| self.commute(a, g))).collect()
    }

    pub fn centralizer(&self, x: usize) -> Result<Subgroup, GroupError> {
        if x >= self.order() {
            return Err(GroupError::ElementNotFound);
        }
        Ok(Subgroup { elements: (0..self.order()).filter(|&a| self.commute(a, x)).collect() })
    }

    pub fn conjugacy_class(&self, x: usize) -> BTreeSet<usize> {
        let mut class = BTreeSet::from([x]);
        let mut queue = VecDeque::from([x]);
        while let Some(a) = queue.pop_front() {
            for g in 0..self.num_generators() {
                let c = self.conjugate(a, self.generator(g));
                if class.insert(c) {
                    queue.push_back(c);
                }
            }
        }
        class
    }

    /// Subgroup generated by the given elements.
    pub fn closure(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut set = BTreeSet::from([0]);
        let mut queue = VecDeque::from([0]);
        while let Some(a) = queue.pop_front() {
            for &g in gens {
                let c = self.mul(a, g);
                if set.insert(c) {
                    queue.push_back(c);
                }
            }
        }
        set
    }
}

/// A subgroup as a sorted list of element indices of its parent; witness
/// words are the parent's.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub elements: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elements.binary_search(&a).is_ok()
    }
}

/// A concrete group (permutations or matrices) closed under its generators,
/// with one witness word per element.
#[derive(Debug, Clone)]
pub struct EnumeratedGroup<E> {
    generators: Vec<E>,
    elements: Vec<E>,
    index: HashMap<E, usize>,
    table: FiniteGroup,
}

/// Breadth-first closure of `generators` starting from `identity`.
pub fn enumerate<E: GroupElement>(
    identity: E,
    generators: Vec<(String, E)>,
    cap: usize,
) -> Result<EnumeratedGroup<E>, GroupError> {
    let (labels, gens): (Vec<String>, Vec<E>) = generators.into_iter().unzip();
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0usize)]);
    let mut table: Vec<Vec<usize>> = Vec::new();
    let mut head = 0;
    while head < elements.len() {
        let mut row = Vec::with_capacity(gens.len());
        for g in &gens {
            let p = elements[head].product(g);
            let idx = match index.get(&p) {
                Some(&i) => i,
                None => {
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded { cap });
                    }
                    let i = elements.len();
                    index.insert(p.clone(), i);
                    elements.push(p);
                    i
                }
            };
            row.push(idx);
        }
        table.push(row);
        head += 1;
    }
    let table = FiniteGroup::from_table(labels, table)?;
    Ok(EnumeratedGroup { generators: gens, elements, index, table })
}

impl<E: GroupElement> EnumeratedGroup<E> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn table(&self) -> &FiniteGroup {
        &self.table
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn generator_labels(&self) -> &[String] {
        self.table.generator_labels()
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Evaluates the witness word of element `i` by multiplying generators.
    pub fn evaluate_word(&self, word: &[usize]) -> E {
        word.iter().fold(self.elements[0].clone(), |acc, &g| acc.product(&self.generators[g]))
    }

    /// Element label: the generator label if it is a generator, otherwise
    /// its witness word joined by `*`.
    pub fn label(&self, i: usize) -> String {
        if i == 0 {
            return "1".to_string();
        }
        match (0..self.table.num_generators()).find(|&g| self.table.generator(g) == i) {
            Some(g) => self.table.generator_labels()[g].clone(),
            None => self.table.word_labels(i).join("*"),
        }
    }
}

pub fn center<E: GroupElement>(g: &EnumeratedGroup<E>) -> Vec<usize> {
    g.table.center()
}

pub fn centralizer<E: GroupElement>(g: &EnumeratedGroup<E>, x: &E) -> Result<Subgroup, GroupError> {
    let i = g.index_of(x).ok_or(GroupError::ElementNotFound)?;
    g.table.centralizer(i)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TtgViolation {
    NotInvolution { element: usize, order: usize },
    NotConjugationClosed { c: usize, d: usize, image: usize },
    ProductOrder { c: usize, d: usize, order: usize },
    DoesNotGenerate { generated: usize, order: usize },
}

impl fmt::Display for TtgViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotInvolution { element, order } => write!(f, "element {element} has order {order}"),
            Self::NotConjugationClosed { c, d, image } => {
                write!(f, "conjugate of {d} by {c} is {image}, outside D")
            }
            Self::ProductOrder { c, d, order } => write!(f, "product of {c} and {d} has order {order}"),
            Self::DoesNotGenerate { generated, order } => {
                write!(f, "D generates a subgroup of order {generated} < {order}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TtgReport {
    pub ok: bool,
    pub witness: Option<TtgViolation>,
}

/// Checks that `d` is a conjugation-closed generating set of involutions
/// whose pairwise products have order at most 3.
pub fn is_3transposition(g: &FiniteGroup, d: &[usize]) -> TtgReport {
    let fail = |v| TtgReport { ok: false, witness: Some(v) };
    let set: HashSet<usize> = d.iter().copied().collect();
    for &x in d {
        let order = g.element_order(x);
        if order != 2 {
            return fail(TtgViolation::NotInvolution { element: x, order });
        }
    }
    for &c in d {
        for &x in d {
            let image = g.conjugate(x, c);
            if !set.contains(&image) {
                return fail(TtgViolation::NotConjugationClosed { c, d: x, image });
            }
        }
    }
    for (i, &c) in d.iter().enumerate() {
        for &x in &d[i + 1..] {
            let order = g.element_order(g.mul(c, x));
            if order > 3 {
                return fail(TtgViolation::ProductOrder { c, d: x, order });
            }
        }
    }
    let generated = g.closure(d).len();
    if generated != g.order() {
        return fail(TtgViolation::DoesNotGenerate { generated, order: g.order() });
    }
    TtgReport { ok: true, witness: None }
}

/// A group with a distinguished class `D` (element indices) and a label for
/// each element of `D`.
#[derive(Debug, Clone)]
pub struct ThreeTranspositionGroup<E> {
    pub group: EnumeratedGroup<E>,
    pub d_class: Vec<usize>,
    pub labels: Vec<String>,
}

impl<E: GroupElement> ThreeTranspositionGroup<E> {
    /// Wraps `(group, d)` after checking the 3-transposition conditions.
    pub fn new(group: EnumeratedGroup<E>, d_class: Vec<usize>) -> Result<Self, GroupError> {
        let report = is_3transposition(group.table(), &d_class);
        if let Some(v) = report.witness {
            return Err(GroupError::NotThreeTransposition(v));
        }
        let labels = d_class.iter().map(|&d| group.label(d)).collect();
        Ok(ThreeTranspositionGroup { group, d_class, labels })
    }

    pub fn position(&self, element: usize) -> Option<usize> {
        self.d_class.iter().position(|&d| d == element)
    }
}

/// `f(𝒢)`: the group generated by the nontrivial point involutions, with `D`
/// those involutions, labelled by their points.
pub fn f_map(fs: &FischerSpace) -> Result<ThreeTranspositionGroup<Permutation>, GroupError> {
    let n = fs.num_points();
    let gens: Vec<(String, Permutation)> =
        (0..n).map(|x| (fs.label(x).to_string(), fs.tau(x))).filter(|(_, t)| !t.is_identity()).collect();
    let labels: Vec<String> = gens.iter().map(|(l, _)| l.clone()).collect();
    let group = enumerate(Permutation::identity(n), gens, DEFAULT_ENUMERATION_CAP)?;
    let mut d_class = Vec::new();
    let mut d_labels = Vec::new();
    for (g, label) in labels.into_iter().enumerate() {
        let e = group.table().generator(g);
        if !d_class.contains(&e) {
            d_class.push(e);
            d_labels.push(label);
        }
    }
    let mut t = ThreeTranspositionGroup::new(group, d_class)?;
    t.labels = d_labels;
    Ok(t)
}

/// `g(G, D)`: points are `D`, lines the triples `{c, d, c^d}` with
/// `order(cd) = 3`.
pub fn g_map<E: GroupElement>(t: &ThreeTranspositionGroup<E>) -> Result<PointLineGeometry, GroupError> {
    let g = t.group.table();
    let pos: HashMap<usize, usize> = t.d_class.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let mut lines = BTreeSet::new();
    for (i, &c) in t.d_class.iter().enumerate() {
        for &d in &t.d_class[i + 1..] {
            if g.element_order(g.mul(c, d)) == 3 {
                let third = g.conjugate(c, d);
                let mut line = vec![pos[&c], pos[&d], pos[&third]];
                line.sort_unstable();
                lines.insert(line);
            }
        }
    }
    let geometry = PointLineGeometry::from_indices(t.labels.clone(), lines.into_iter().collect())?;
    let report = is_fischer_space(&geometry)?;
    if let Some(v) = report.witness {
        return Err(GroupError::Geometry(GeometryError::NotFischer(v)));
    }
    Ok(geometry)
}

/// `(G, D)°`: the quotient by the center, realised as the regular
/// permutation action of `G/Z(G)` on center cosets, with `D` reduced to the
/// cosets of noncentral elements of `D`.
pub fn center_reduce<E: GroupElement>(
    t: &ThreeTranspositionGroup<E>,
) -> Result<ThreeTranspositionGroup<Permutation>, GroupError> {
    let g = t.group.table();
    let z = g.center();
    let n = g.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for a in 0..n {
        if coset_of[a] != usize::MAX {
            continue;
        }
        for &c in &z {
            coset_of[g.mul(a, c)] = reps.len();
        }
        reps.push(a);
    }
    let m = reps.len();
    let action = |x: usize| {
        let images = reps.iter().map(|&r| coset_of[g.mul(r, x)]).collect();
        Permutation::from_images(images)
    };
    let gens = (0..g.num_generators())
        .map(|k| Ok((g.generator_labels()[k].clone(), action(g.generator(k))?)))
        .collect::<Result<Vec<_>, GroupError>>()?;
    let quotient = enumerate(Permutation::identity(m), gens, DEFAULT_ENUMERATION_CAP)?;
    let mut d_class = Vec::new();
    let mut labels = Vec::new();
    for (i, &d) in t.d_class.iter().enumerate() {
        if z.contains(&d) {
            continue;
        }
        let idx = quotient.index_of(&action(d)?).ok_or(GroupError::ElementNotFound)?;
        if !d_class.contains(&idx) {
            d_class.push(idx);
            labels.push(t.labels[i].clone());
        }
    }
    let mut reduced = ThreeTranspositionGroup::new(quotient, d_class)?;
    reduced.labels = labels;
    Ok(reduced)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundtripReport {
    pub ok: bool,
    pub points: usize,
    pub lines: usize,
}

/// Verifies `g(f(𝒢)) ≅ 𝒢°` through the canonical map `x ↦ τ_x`.
pub fn buekenhout_roundtrip(fs: &FischerSpace) -> Result<RoundtripReport, GroupError> {
    let reduced = fs.geometry().without_isolated();
    let f = f_map(fs)?;
    let back = g_map(&f)?;
    // point x of 𝒢° goes to the position of τ_x in D
    let mut map = Vec::with_capacity(reduced.num_points());
    for label in reduced.points() {
        let x = fs.geometry().require_point(label)?;
        let tau = f.group.index_of(&fs.tau(x)).ok_or(GroupError::ElementNotFound)?;
        map.push(f.position(tau).ok_or(GroupError::ElementNotFound)?);
    }
    Ok(RoundtripReport {
        ok: is_isomorphism(&reduced, &back, &map),
        points: reduced.num_points(),
        lines: reduced.num_lines(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FgRoundtripReport {
    pub ok: bool,
    pub reduced_order: usize,
    pub f_order: usize,
    pub bijection_on_d: bool,
    pub conjugation_compatible: bool,
}

/// Verifies `f(g(G, D)) ≅ (G, D)°` through `dZ ↦ τ_d`: equal orders, the map
/// is a well-defined bijection between the two classes, and it carries
/// conjugation in `D°` to conjugation in the image.
pub fn fg_roundtrip<E: GroupElement>(t: &ThreeTranspositionGroup<E>) -> Result<FgRoundtripReport, GroupError> {
    let geometry = g_map(t)?;
    let fs = FischerSpace::new(geometry)?;
    let image = f_map(&fs)?;
    let reduced = center_reduce(t)?;
    let g = t.group.table();
    let z = g.center();

    // dZ ↦ τ_d, keyed by the reduced class element of d
    let mut assignment: HashMap<usize, usize> = HashMap::new();
    let mut well_defined = true;
    for (pos, &d) in t.d_class.iter().enumerate() {
        if z.contains(&d) {
            continue;
        }
        let target = image.group.index_of(&fs.tau(pos)).ok_or(GroupError::ElementNotFound)?;
        let label = &t.labels[pos];
        let reduced_pos = reduced.labels.iter().position(|l| l == label);
        let key = match reduced_pos {
            Some(p) => reduced.d_class[p],
            // d shares its coset with an earlier element of D
            None => {
                let coset_partner = t.d_class[..pos]
                    .iter()
                    .position(|&e| z.iter().any(|&c| g.mul(e, c) == d))
                    .ok_or(GroupError::ElementNotFound)?;
                let p = reduced
                    .labels
                    .iter()
                    .position(|l| *l == t.labels[coset_partner])
                    .ok_or(GroupError::ElementNotFound)?;
                reduced.d_class[p]
            }
        };
        if let Some(&prev) = assignment.get(&key) {
            well_defined &= prev == target;
        } else {
            assignment.insert(key, target);
        }
    }
    let targets: HashSet<usize> = assignment.values().copied().collect();
    let bijection_on_d = well_defined
        && assignment.len() == reduced.d_class.len()
        && targets.len() == assignment.len()
        && targets == image.d_class.iter().copied().collect();

    let rg = reduced.group.table();
    let ig = image.group.table();
    let conjugation_compatible = bijection_on_d
        && assignment.iter().all(|(&c, &tc)| {
            assignment.iter().all(|(&d, &td)| {
                let cd = rg.conjugate(c, d);
                assignment.get(&cd) == Some(&ig.conjugate(tc, td))
            })
        });

    let reduced_order = reduced.group.order();
    let f_order = image.group.order();
    Ok(FgRoundtripReport {
        ok: reduced_order == f_order && bijection_on_d && conjugation_compatible,
        reduced_order,
        f_order,
        bijection_on_d,
        conjugation_compatible,
    })
}

/// The Miyamoto group as a matrix group, plus the induced permutation action
/// on points for Matsuo algebras.
#[derive(Debug, Clone)]
pub struct MiyamotoGroup {
    pub matrices: EnumeratedGroup<Matrix>,
    pub point_action: Option<EnumeratedGroup<Permutation>>,
}

impl MiyamotoGroup {
    pub fn order(&self) -> usize {
        self.matrices.order()
    }
}

/// Matrices of all `τ_e`, `e ∈ Ω`, in axis order.
pub fn miyamoto_generators(aa: &AxialAlgebra) -> Result<Vec<Matrix>, GroupError> {
    if aa.rule().grading().is_none() {
        return Err(GroupError::NoGrading);
    }
    aa.axes().iter().map(|e| miyamoto_matrix(aa, e).map_err(GroupError::from)).collect()
}

/// Checks that every `τ_y` maps every axis to an axis.
pub(crate) fn require_closed(aa: &AxialAlgebra, taus: &[Matrix]) -> Result<(), GroupError> {
    for (y, t) in taus.iter().enumerate() {
        for (x, e) in aa.axes().iter().enumerate() {
            if aa.axis_index(&t.apply(e)).is_none() {
                return Err(GroupError::NotClosed {
                    axis: aa.axis_labels()[x].clone(),
                    by: aa.axis_labels()[y].clone(),
                });
            }
        }
    }
    Ok(())
}

pub fn miyamoto_group(aa: &AxialAlgebra) -> Result<MiyamotoGroup, GroupError> {
    let taus = miyamoto_generators(aa)?;
    require_closed(aa, &taus)?;
    let labels = aa.axis_labels().to_vec();
    let dim = aa.algebra().dim();
    let gens: Vec<(String, Matrix)> = labels.iter().cloned().zip(taus.iter().cloned()).collect();
    let matrices = enumerate(Matrix::identity(dim), gens, DEFAULT_ENUMERATION_CAP)?;
    let point_action = if aa.matsuo_origin().is_some() {
        let perms = taus
            .iter()
            .zip(&labels)
            .map(|(t, l)| matrix_to_point_permutation(t).ok_or_else(|| GroupError::NotPointAction(l.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        let gens = labels.into_iter().zip(perms).collect();
        Some(enumerate(Permutation::identity(dim), gens, DEFAULT_ENUMERATION_CAP)?)
    } else {
        None
    };
    Ok(MiyamotoGroup { matrices, point_action })
}

/// Reads a permutation matrix (row `i` is the unit vector of the image of
/// `i`) as a permutation.
pub fn matrix_to_point_permutation(m: &Matrix) -> Option<Permutation> {
    use num_traits::{One, Zero};
    let mut images = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let row = m.row(i);
        let ones: Vec<usize> = (0..row.len()).filter(|&j| row[j].is_one()).collect();
        if ones.len() != 1 || row.iter().filter(|x| !x.is_zero()).count() != 1 {
            return None;
        }
        images.push(ones[0]);
    }
    Permutation::from_images(images).ok()
}

/// Distinct axes have distinct Miyamoto involutions.
pub fn unique_type_check(aa: &AxialAlgebra) -> Result<bool, GroupError> {
    let taus = miyamoto_generators(aa)?;
    let distinct: HashSet<&Matrix> = taus.iter().collect();
    Ok(distinct.len() == taus.len())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransitivityReport {
    pub connected: bool,
    pub transitive: bool,
    pub d_single_class: bool,
}

/// Computes connectivity of the space, transitivity of the Miyamoto group on
/// points, and whether the point involutions form one conjugacy class, each
/// independently; errors if they disagree.
pub fn transitivity_equivalences(fs: &FischerSpace) -> Result<TransitivityReport, GroupError> {
    if fs.num_points() == 0 {
        return Err(GroupError::EmptyGeometry);
    }
    if fs.has_isolated_points() {
        return Err(GroupError::HasIsolatedPoints);
    }
    let connected = crate::geometry::connected_components(fs.geometry()).components.len() == 1;

    let f = f_map(fs)?;
    let orbit = permutation_orbit(f.group.generators(), 0);
    let transitive = orbit.len() == fs.num_points();

    let class = f.group.table().conjugacy_class(f.d_class[0]);
    let d: BTreeSet<usize> = f.d_class.iter().copied().collect();
    let d_single_class = class == d;

    let report = TransitivityReport { connected, transitive, d_single_class };
    if !(connected == transitive && transitive == d_single_class) {
        return Err(GroupError::Inconsistent(format!("transitivity statements disagree: {report:?}")));
    }
    Ok(report)
}

pub fn permutation_orbit(generators: &[Permutation], start: usize) -> BTreeSet<usize> {
    let mut orbit = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = g.apply(x);
            if orbit.insert(y) {
                queue.push_back(y);
            }
        }
    }
    orbit
}

/// Point orbits of a permutation group, ordered by smallest point.
pub fn permutation_orbits(generators: &[Permutation], degree: usize) -> Vec<BTreeSet<usize>> {
    let mut seen = vec![false; degree];
    let mut orbits = Vec::new();
    for p in 0..degree {
        if !seen[p] {
            let o = permutation_orbit(generators, p);
            for &x in &o {
                seen[x] = true;
            }
            orbits.push(o);
        }
    }
    orbits
}
