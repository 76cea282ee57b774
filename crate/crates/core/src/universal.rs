//! The group `U(A, Ω)`: presentation, coset enumeration, and its relation to
//! the Miyamoto group and to 3-transposition groups.
//!
//! Generators `t_e` are involutions, so every coset-table column is its own
//! inverse and words never need inverse letters.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{matsuo, AlgebraError, AxialAlgebra};
use crate::exactlin::{Matrix, Rational};
use crate::geometry::{is_isomorphism, FischerSpace, GeometryError};
use crate::groups::{
    enumerate, g_map, is_3transposition, miyamoto_generators, unique_type_check, EnumeratedGroup, FiniteGroup,
    GroupElement, GroupError, Permutation, ThreeTranspositionGroup, DEFAULT_ENUMERATION_CAP,
};

/// Default coset cap for enumeration.
pub const DEFAULT_COSET_CAP: usize = 100_000;

const UNDEFINED: usize = usize::MAX;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum UniversalError {
    #[error("the fusion rule has no Z/2-grading")]
    NoGrading,
    #[error("axis set is not Miyamoto-closed: image of {axis} under tau_{by} is not an axis")]
    NotClosed { axis: String, by: String },
    #[error("coset enumeration exceeded the cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("relator uses unknown generator {0}")]
    UnknownGenerator(String),
    #[error("relator {0} has a shape the word oracle cannot use")]
    OracleUnsupported(String),
    #[error("the Fischer space has isolated points")]
    HasIsolatedPoints,
    #[error("phi is not an isomorphism onto the target geometry")]
    PhiNotIsomorphism,
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Involutory generators and relators as words of generator indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Vec<usize>>,
}

/// Label form used for JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<String>>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Vec<usize>>) -> Result<Self, UniversalError> {
        if let Some(&bad) = relators.iter().flatten().find(|&&g| g >= generators.len()) {
            return Err(UniversalError::UnknownGenerator(bad.to_string()));
        }
        Ok(Presentation { generators, relators })
    }

    pub fn from_doc(doc: &PresentationDoc) -> Result<Self, UniversalError> {
        let index: HashMap<&str, usize> = doc.generators.iter().enumerate().map(|(i, g)| (g.as_str(), i)).collect();
        let relators = doc
            .relators
            .iter()
            .map(|r| {
                r.iter()
                    .map(|l| index.get(l.as_str()).copied().ok_or_else(|| UniversalError::UnknownGenerator(l.clone())))
                    .collect()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Presentation::new(doc.generators.clone(), relators)
    }

    pub fn to_doc(&self) -> PresentationDoc {
        PresentationDoc {
            generators: self.generators.clone(),
            relators: self.relators.iter().map(|r| self.word_labels(r)).collect(),
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Vec<usize>] {
        &self.relators
    }

    pub fn word_labels(&self, w: &[usize]) -> Vec<String> {
        w.iter().map(|&g| self.generators[g].clone()).collect()
    }
}

/// Generators `t_e` for `e ∈ Ω`, relators `t_e²` and `t_y t_x t_y t_z` with
/// `z = x^{τ_y}` for ordered pairs `x ≠ y`.
pub fn build_presentation(aa: &AxialAlgebra) -> Result<Presentation, UniversalError> {
    let taus = miyamoto_generators(aa).map_err(|e| match e {
        GroupError::NoGrading => UniversalError::NoGrading,
        other => other.into(),
    })?;
    let n = aa.axes().len();
    let mut relators: Vec<Vec<usize>> = (0..n).map(|g| vec![g, g]).collect();
    for (y, t) in taus.iter().enumerate() {
        for x in (0..n).filter(|&x| x != y) {
            let z = aa.axis_index(&t.apply(&aa.axes()[x])).ok_or_else(|| UniversalError::NotClosed {
                axis: aa.axis_labels()[x].clone(),
                by: aa.axis_labels()[y].clone(),
            })?;
            relators.push(vec![y, x, y, z]);
        }
    }
    Presentation::new(aa.axis_labels().to_vec(), relators)
}

/// Coset enumeration state over the trivial subgroup.
struct CosetTable<'a> {
    relators: &'a [Vec<usize>],
    k: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    live: usize,
    cap: usize,
    queue: VecDeque<usize>,
}

impl<'a> CosetTable<'a> {
    fn new(p: &'a Presentation, cap: usize) -> Self {
        let k = p.generators.len();
        CosetTable {
            relators: &p.relators,
            k,
            table: vec![vec![UNDEFINED; k]],
            parent: vec![0],
            live: 1,
            cap,
            queue: VecDeque::new(),
        }
    }

    fn find(&mut self, mut c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[c] != root {
            let next = self.parent[c];
            self.parent[c] = root;
            c = next;
        }
        root
    }

    fn alive(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, g: usize) -> Result<usize, UniversalError> {
        if self.live >= self.cap {
            return Err(UniversalError::CapExceeded { cap: self.cap });
        }
        let d = self.table.len();
        self.table.push(vec![UNDEFINED; self.k]);
        self.parent.push(d);
        self.live += 1;
        self.table[c][g] = d;
        self.table[d][g] = c;
        Ok(d)
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi] = lo;
        self.live -= 1;
        self.queue.push_back(hi);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.merge(a, b);
        while let Some(d) = self.queue.pop_front() {
            for g in 0..self.k {
                let e = self.table[d][g];
                if e == UNDEFINED {
                    continue;
                }
                self.table[d][g] = UNDEFINED;
                if self.table[e][g] == d {
                    self.table[e][g] = UNDEFINED;
                }
                let (d1, e1) = (self.find(d), self.find(e));
                let (dg, eg) = (self.table[d1][g], self.table[e1][g]);
                if dg != UNDEFINED {
                    self.merge(e1, dg);
                } else if eg != UNDEFINED {
                    self.merge(d1, eg);
                } else {
                    self.table[d1][g] = e1;
                    self.table[e1][g] = d1;
                }
            }
        }
    }

    /// HLT scan of relator `r` from coset `c`, defining cosets as needed.
    fn scan_and_fill(&mut self, c: usize, r: usize) -> Result<(), UniversalError> {
        let len = self.relators[r].len() as isize;
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0isize, len - 1);
        loop {
            let w = &self.relators[r];
            while i <= j && self.table[f][w[i as usize]] != UNDEFINED {
                f = self.table[f][w[i as usize]];
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.table[b][w[j as usize]] != UNDEFINED {
                b = self.table[b][w[j as usize]];
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            let g = w[i as usize];
            if i == j {
                self.table[f][g] = b;
                self.table[b][g] = f;
                return Ok(());
            }
            self.define(f, g)?;
        }
    }

    fn run(&mut self) -> Result<(), UniversalError> {
        let mut c = 0;
        while c < self.table.len() {
            for r in 0..self.relators.len() {
                if !self.alive(c) {
                    break;
                }
                self.scan_and_fill(c, r)?;
            }
            for g in 0..self.k {
                if self.alive(c) && self.table[c][g] == UNDEFINED {
                    self.define(c, g)?;
                }
            }
            c += 1;
        }
        Ok(())
    }

    /// Live cosets renumbered consecutively, in increasing order.
    fn compact(mut self) -> Vec<Vec<usize>> {
        let live: Vec<usize> = (0..self.table.len()).filter(|&c| self.alive(c)).collect();
        let mut new_index = vec![UNDEFINED; self.table.len()];
        for (i, &c) in live.iter().enumerate() {
            new_index[c] = i;
        }
        let mut out = Vec::with_capacity(live.len());
        for &c in &live {
            let row: Vec<usize> = (0..self.k).map(|g| self.table[c][g]).collect();
            out.push(row.into_iter().map(|d| new_index[self.find(d)]).collect());
        }
        out
    }
}

/// `U` as its regular action: a complete coset table over the trivial
/// subgroup, renumbered breadth-first with witness words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalGroup {
    presentation: Presentation,
    group: FiniteGroup,
}

/// Enumerates the cosets of the trivial subgroup, stopping with an error once
/// more than `cap` cosets are simultaneously live.
pub fn todd_coxeter(p: &Presentation, cap: usize) -> Result<UniversalGroup, UniversalError> {
    let mut ct = CosetTable::new(p, cap.max(1));
    ct.run()?;
    let table = ct.compact();
    let group = FiniteGroup::from_table(p.generators.clone(), table)?;
    for c in 0..group.order() {
        for r in &p.relators {
            if group.walk(c, r) != c {
                return Err(UniversalError::Inconsistent(format!("relator {:?} fails at coset {c}", p.word_labels(r))));
            }
        }
    }
    Ok(UniversalGroup { presentation: p.clone(), group })
}

impl UniversalGroup {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    /// Element index of `t_g`.
    pub fn generator(&self, g: usize) -> usize {
        self.group.generator(g)
    }

    /// Right multiplication by `t_g` on element indices.
    pub fn generator_permutation(&self, g: usize) -> Permutation {
        Permutation::from_images(self.group.right_table().iter().map(|row| row[g]).collect())
            .expect("coset table columns are bijections")
    }

    /// The group generated by the regular permutations of the generators.
    pub fn regular_permutation_group(&self) -> Result<EnumeratedGroup<Permutation>, GroupError> {
        let gens = (0..self.presentation.generators.len())
            .map(|g| (self.presentation.generators[g].clone(), self.generator_permutation(g)))
            .collect();
        enumerate(Permutation::identity(self.order()), gens, DEFAULT_ENUMERATION_CAP)
    }

    /// `element,generator…` rows, one per element.
    pub fn coset_table_csv(&self) -> String {
        let mut out = String::from("element");
        for g in &self.presentation.generators {
            out.push(',');
            out.push_str(g);
        }
        out.push('\n');
        for (c, row) in self.group.right_table().iter().enumerate() {
            out.push_str(&c.to_string());
            for d in row {
                out.push(',');
                out.push_str(&d.to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// Counts elements of the presented group without coset enumeration.
///
/// Words without repeated letters represent every element: a repeat
/// `t_x t_{e₁}…t_{eₙ} t_x` rewrites to `t_{e₁^{τ_x}}…t_{eₙ^{τ_x}}`, where the
/// conjugates are read off the length-4 relators. Right multiplication acts
/// on reduced words, and the count is the number of classes of the smallest
/// congruence making every relator act trivially.
pub fn word_enum_oracle(p: &Presentation, cap: usize) -> Result<usize, UniversalError> {
    let n = p.generators.len();
    let mut conj = vec![vec![UNDEFINED; n]; n];
    for x in 0..n {
        conj[x][x] = x;
    }
    for r in &p.relators {
        match r.as_slice() {
            [a, b] if a == b => {}
            [y, x, y2, z] if y == y2 => {
                if conj[*y][*x] != UNDEFINED && conj[*y][*x] != *z {
                    return Err(UniversalError::OracleUnsupported(format!("{:?}", p.word_labels(r))));
                }
                conj[*y][*x] = *z;
            }
            _ => return Err(UniversalError::OracleUnsupported(format!("{:?}", p.word_labels(r)))),
        }
    }
    if conj.iter().flatten().any(|&z| z == UNDEFINED) {
        return Err(UniversalError::OracleUnsupported("conjugation relators do not cover all pairs".into()));
    }

    let reduce = |mut w: Vec<usize>| -> Vec<usize> {
        'outer: loop {
            let mut last = vec![UNDEFINED; n];
            for j in 0..w.len() {
                let x = w[j];
                if last[x] != UNDEFINED {
                    let i = last[x];
                    let inner: Vec<usize> = w[i + 1..j].iter().map(|&e| conj[x][e]).collect();
                    w.splice(i..=j, inner);
                    continue 'outer;
                }
                last[x] = j;
            }
            return w;
        }
    };

    // all repeat-free words, breadth-first
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(Vec::new(), 0)]);
    let mut head = 0;
    while head < words.len() {
        let w = words[head].clone();
        for g in (0..n).filter(|g| !w.contains(g)) {
            if words.len() >= cap {
                return Err(UniversalError::CapExceeded { cap });
            }
            let mut v = w.clone();
            v.push(g);
            index.insert(v.clone(), words.len());
            words.push(v);
        }
        head += 1;
    }
    let act: Vec<Vec<usize>> = words
        .iter()
        .map(|w| {
            (0..n)
                .map(|g| {
                    let mut v = w.clone();
                    v.push(g);
                    index[&reduce(v)]
                })
                .collect()
        })
        .collect();

    let mut parent: Vec<usize> = (0..words.len()).collect();
    fn find(parent: &mut [usize], mut c: usize) -> usize {
        while parent[c] != c {
            parent[c] = parent[parent[c]];
            c = parent[c];
        }
        c
    }
    let mut pending: Vec<(usize, usize)> = Vec::new();
    for w in 0..words.len() {
        for r in &p.relators {
            let end = r.iter().fold(w, |c, &g| act[c][g]);
            pending.push((w, end));
        }
    }
    let mut classes = words.len();
    while let Some((a, b)) = pending.pop() {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            continue;
        }
        parent[rb] = ra;
        classes -= 1;
        for g in 0..n {
            pending.push((act[ra][g], act[rb][g]));
        }
    }
    Ok(classes)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TauReport {
    pub miy_order: usize,
    pub u_order: usize,
    pub kernel_order: usize,
    pub center_order: usize,
    pub central: bool,
    pub kernel_equals_center: bool,
    pub unique_type: bool,
    #[serde(skip)]
    pub kernel: Vec<usize>,
}

/// The map `t_e ↦ τ_e` evaluated along witness words and checked to be a
/// homomorphism on the whole table.
pub fn tau_images(u: &UniversalGroup, aa: &AxialAlgebra) -> Result<Vec<Matrix>, UniversalError> {
    let taus = miyamoto_generators(aa)?;
    if taus.len() != u.presentation.generators.len() {
        return Err(UniversalError::Inconsistent("presentation does not match the axis set".into()));
    }
    let g = &u.group;
    let mut images: Vec<Matrix> = Vec::with_capacity(g.order());
    images.push(Matrix::identity(aa.dim()));
    for a in 1..g.order() {
        let w = g.word(a);
        let prefix = g.walk(0, &w[..w.len() - 1]);
        let img = images[prefix].product(&taus[w[w.len() - 1]]);
        images.push(img);
    }
    for a in 0..g.order() {
        for (k, t) in taus.iter().enumerate() {
            if images[g.right_table()[a][k]] != images[a].product(t) {
                return Err(UniversalError::Inconsistent("t_e -> tau_e is not a homomorphism".into()));
            }
        }
    }
    Ok(images)
}

pub fn tau_epimorphism(u: &UniversalGroup, aa: &AxialAlgebra) -> Result<TauReport, UniversalError> {
    let images = tau_images(u, aa)?;
    let identity = Matrix::identity(aa.dim());
    let kernel: Vec<usize> = (0..u.order()).filter(|&a| images[a] == identity).collect();
    let center = u.group.center();
    let central = kernel.iter().all(|k| center.contains(k));
    let miy_order = images.iter().collect::<HashSet<_>>().len();
    Ok(TauReport {
        miy_order,
        u_order: u.order(),
        kernel_order: kernel.len(),
        center_order: center.len(),
        central,
        kernel_equals_center: kernel == center,
        unique_type: unique_type_check(aa)?,
        kernel,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniversalTtgReport {
    pub is_ttg: bool,
    pub geometry_iso: bool,
    pub u_order: usize,
    pub center_order: usize,
    pub generators_distinct_involutions: bool,
    pub single_class: bool,
}

/// The universal group of a Matsuo algebra.
pub fn universal_group(fs: &FischerSpace, alpha: &Rational, cap: usize) -> Result<UniversalGroup, UniversalError> {
    let aa = matsuo(fs, alpha)?;
    todd_coxeter(&build_presentation(&aa)?, cap)
}

/// `U` with `D = {t_x}`, as a permutation group.
pub fn universal_ttg(u: &UniversalGroup) -> Result<ThreeTranspositionGroup<Permutation>, UniversalError> {
    let regular = u.regular_permutation_group()?;
    let d: Vec<usize> = (0..u.presentation.generators.len()).map(|g| regular.table().generator(g)).collect();
    let mut t = ThreeTranspositionGroup::new(regular, d)?;
    t.labels = u.presentation.generators.clone();
    Ok(t)
}

/// Checks that `(U, {t_x})` is a 3-transposition group whose geometry is
/// the Fischer space again, via `x ↦ t_x`.
pub fn universal_ttg_check(fs: &FischerSpace, alpha: &Rational) -> Result<UniversalTtgReport, UniversalError> {
    if fs.has_isolated_points() {
        return Err(UniversalError::HasIsolatedPoints);
    }
    let u = universal_group(fs, alpha, DEFAULT_COSET_CAP)?;
    let g = &u.group;
    let d: Vec<usize> = (0..fs.num_points()).map(|x| u.generator(x)).collect();
    let distinct = d.iter().collect::<HashSet<_>>().len() == d.len();
    let generators_distinct_involutions = distinct && d.iter().all(|&t| g.element_order(t) == 2);
    let is_ttg = generators_distinct_involutions && is_3transposition(g, &d).ok;
    let single_class = d.first().is_some_and(|&t| g.conjugacy_class(t) == d.iter().copied().collect());
    let geometry_iso = is_ttg && {
        let t = universal_ttg(&u)?;
        let back = g_map(&t)?;
        let map: Vec<usize> = (0..fs.num_points()).collect();
        is_isomorphism(fs.geometry(), &back, &map)
    };
    Ok(UniversalTtgReport {
        is_ttg,
        geometry_iso,
        u_order: u.order(),
        center_order: g.center().len(),
        generators_distinct_involutions,
        single_class,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaReport {
    pub is_epi: bool,
    pub relators_hold: bool,
    pub surjective: bool,
    pub u_central_quotient: usize,
    pub target_central_quotient: usize,
    pub quotient_orders_match: bool,
}

/// Checks that `t_x ↦ phi[x]` defines an epimorphism `U → G′`, given that
/// `phi` (point index → element of `D′`) is an isomorphism of the Fischer
/// space onto `g(G′, D′)`.
pub fn theta_epimorphism<E: GroupElement>(
    u: &UniversalGroup,
    fs: &FischerSpace,
    target: &ThreeTranspositionGroup<E>,
    phi: &[usize],
) -> Result<ThetaReport, UniversalError> {
    if phi.len() != fs.num_points() || u.presentation.generators.len() != fs.num_points() {
        return Err(UniversalError::PhiNotIsomorphism);
    }
    let positions = phi
        .iter()
        .map(|&e| target.position(e).ok_or(UniversalError::PhiNotIsomorphism))
        .collect::<Result<Vec<_>, _>>()?;
    let geometry = g_map(target)?;
    if !is_isomorphism(fs.geometry(), &geometry, &positions) {
        return Err(UniversalError::PhiNotIsomorphism);
    }
    // generator g of U is the point with the same label
    let images = u
        .presentation
        .generators
        .iter()
        .map(|l| fs.geometry().require_point(l).map(|x| phi[x]))
        .collect::<Result<Vec<_>, _>>()?;
    let tg = target.group.table();
    let relators_hold = u.presentation.relators.iter().all(|r| r.iter().fold(0, |acc, &g| tg.mul(acc, images[g])) == 0);
    let surjective = tg.closure(&images).len() == tg.order();
    let u_central_quotient = u.order() / u.group.center().len();
    let target_central_quotient = tg.order() / tg.center().len();
    Ok(ThetaReport {
        is_epi: relators_hold && surjective,
        relators_hold,
        surjective,
        u_central_quotient,
        target_central_quotient,
        quotient_orders_match: u_central_quotient == target_central_quotient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::clifford_example;
    use crate::exactlin::rat;
    use crate::geometry::{catalog, CatalogName};
    use crate::groups::f_map;

    fn half() -> Rational {
        rat(1, 2)
    }

    fn presentation_of(name: CatalogName) -> Presentation {
        let fs = catalog(name, None).unwrap();
        build_presentation(&matsuo(&fs, &half()).unwrap()).unwrap()
    }

    #[test]
    fn presentation_shapes() {
        let p = presentation_of(CatalogName::SingleLine);
        assert_eq!(p.generators().len(), 3);
        assert_eq!(p.relators().iter().filter(|r| r.len() == 2).count(), 3);
        // a b a = c on the single line
        assert!(p.relators().contains(&vec![0, 1, 0, 2]));
        assert_eq!(presentation_of(CatalogName::Affine3).generators().len(), 9);
    }

    #[test]
    fn clifford_presentation_is_not_all_commutations() {
        let p = build_presentation(&clifford_example()).unwrap();
        assert_eq!(p.generators().len(), 4);
        // τ_{e₁} swaps e₂ and 𝟙−e₂
        assert!(p.relators().contains(&vec![0, 2, 0, 3]));
        assert!(p.relators().contains(&vec![0, 1, 0, 1]));
    }

    #[test]
    fn small_orders() {
        assert_eq!(todd_coxeter(&presentation_of(CatalogName::SingleLine), 1000).unwrap().order(), 6);
        assert_eq!(todd_coxeter(&presentation_of(CatalogName::Affine3), 1000).unwrap().order(), 54);
    }

    #[test]
    fn free_involutions_commuting() {
        let p = Presentation::new(
            vec!["a".into(), "b".into()],
            vec![vec![0, 0], vec![1, 1], vec![0, 1, 0, 1], vec![1, 0, 1, 0]],
        )
        .unwrap();
        assert_eq!(todd_coxeter(&p, 100).unwrap().order(), 4);
        assert_eq!(word_enum_oracle(&p, 100).unwrap(), 4);
    }

    #[test]
    fn trivial_presentation() {
        let p = Presentation::new(Vec::new(), Vec::new()).unwrap();
        assert_eq!(todd_coxeter(&p, 10).unwrap().order(), 1);
        assert_eq!(word_enum_oracle(&p, 10).unwrap(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let p = presentation_of(CatalogName::Affine3);
        assert!(matches!(todd_coxeter(&p, 20), Err(UniversalError::CapExceeded { cap: 20 })));
    }

    #[test]
    fn oracle_agrees() {
        for name in [CatalogName::SingleLine, CatalogName::DualAffine2] {
            let p = presentation_of(name);
            assert_eq!(word_enum_oracle(&p, 100_000).unwrap(), todd_coxeter(&p, 100_000).unwrap().order());
        }
        let p = build_presentation(&clifford_example()).unwrap();
        assert_eq!(word_enum_oracle(&p, 100_000).unwrap(), todd_coxeter(&p, 100_000).unwrap().order());
    }

    #[test]
    fn witness_words_evaluate() {
        let u = todd_coxeter(&presentation_of(CatalogName::DualAffine2), 100_000).unwrap();
        for a in 0..u.order() {
            assert_eq!(u.group().walk(0, u.group().word(a)), a);
        }
        let regular = u.regular_permutation_group().unwrap();
        assert_eq!(regular.order(), u.order());
    }

    #[test]
    fn tau_on_affine_3() {
        let fs = catalog(CatalogName::Affine3, None).unwrap();
        let aa = matsuo(&fs, &half()).unwrap();
        let u = todd_coxeter(&build_presentation(&aa).unwrap(), DEFAULT_COSET_CAP).unwrap();
        let r = tau_epimorphism(&u, &aa).unwrap();
        assert_eq!((r.u_order, r.miy_order, r.kernel_order), (54, 18, 3));
        assert!(r.central && r.kernel_equals_center && r.unique_type);
    }

    #[test]
    fn tau_on_single_line() {
        let fs = catalog(CatalogName::SingleLine, None).unwrap();
        let aa = matsuo(&fs, &half()).unwrap();
        let u = todd_coxeter(&build_presentation(&aa).unwrap(), DEFAULT_COSET_CAP).unwrap();
        let r = tau_epimorphism(&u, &aa).unwrap();
        assert!(r.kernel_equals_center);
        assert_eq!(r.kernel_order, 1);
    }

    #[test]
    fn universal_ttg() {
        for name in [CatalogName::Affine3, CatalogName::DualAffine2, CatalogName::SingleLine] {
            let fs = catalog(name, None).unwrap();
            let r = universal_ttg_check(&fs, &half()).unwrap();
            assert!(r.is_ttg && r.geometry_iso && r.single_class, "{name:?}");
        }
    }

    #[test]
    fn theta_onto_f_affine_3() {
        let fs = catalog(CatalogName::Affine3, None).unwrap();
        let u = universal_group(&fs, &half(), DEFAULT_COSET_CAP).unwrap();
        let target = f_map(&fs).unwrap();
        let r = theta_epimorphism(&u, &fs, &target, &target.d_class).unwrap();
        assert!(r.is_epi && r.quotient_orders_match);
        assert_eq!(r.target_central_quotient, 18);
    }
}
