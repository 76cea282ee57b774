//! Modules over axial algebras and representations of `U(A, Ω)`.
//!
//! A module of dimension `n` stores one `n×n` matrix per algebra basis
//! element: row `i` of `actions[j]` is `mᵢ·bⱼ`. The action of a general
//! algebra element is the corresponding linear combination.

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{eigenspace, frobenius_gram, matsuo_system, AlgebraError, AxialAlgebra};
use crate::exactlin::{
    direct_sum_of, format_rational, format_vector, int, is_zero_vector, scale_vector, unit_vector, zero_vector,
    LinError, Matrix, Rational, Subspace, Vector,
};
use crate::geometry::{connected_components, GeometryError, PointLineGeometry, TripleSystem};
use crate::groups::GroupError;
use crate::universal::{UniversalError, UniversalGroup};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModuleError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the fusion rule has no Z/2-grading")]
    NoGrading,
    #[error("module eigenspaces of axis {0} do not decompose the module")]
    NotAModuleAt(String),
    #[error("module axioms fail: {0}")]
    NotAModule(ModuleViolation),
    #[error("relator {0:?} does not act trivially")]
    RelatorViolated(Vec<String>),
    #[error("image of {0} is not an involution")]
    BadInvolution(String),
    #[error("not a Matsuo algebra")]
    NotMatsuo,
    #[error("alpha {given} differs from the algebra's alpha {expected}")]
    AlphaMismatch { given: String, expected: String },
    #[error("axis {0} has a nontrivial 1-eigenspace on the module")]
    NontrivialOneEigenspace(String),
    #[error("subspace is not a submodule")]
    NotASubmodule,
    #[error("the form is degenerate on the submodule")]
    DegenerateOnN,
    #[error("the form is not a Frobenius form for the module")]
    NotFrobenius,
    #[error("form is not symmetric")]
    NotSymmetric,
    #[error("the Fischer space is not connected or has isolated points")]
    NotConnected,
    #[error("seed is not a nonzero 1-eigenvector of the axis")]
    SeedNotOneEigenvector,
    #[error("unknown axis {0}")]
    UnknownAxis(String),
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Universal(#[from] UniversalError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// A right module: `actions[j]` is the matrix of `m ↦ m·bⱼ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraModule {
    dim: usize,
    actions: Vec<Matrix>,
}

impl AlgebraModule {
    pub fn new(dim: usize, actions: Vec<Matrix>) -> Result<Self, ModuleError> {
        if let Some(m) = actions.iter().find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(ModuleError::DimensionMismatch { expected: dim, found: m.rows().max(m.cols()) });
        }
        Ok(AlgebraModule { dim, actions })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    /// Matrix of `m ↦ m·a` for an algebra vector `a`.
    pub fn action(&self, a: &[Rational]) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (c, m) in a.iter().zip(&self.actions) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    pub fn act(&self, m: &[Rational], a: &[Rational]) -> Vector {
        self.action(a).apply(m)
    }

    fn require_algebra_dim(&self, aa: &AxialAlgebra) -> Result<(), ModuleError> {
        if self.actions.len() != aa.dim() {
            return Err(ModuleError::DimensionMismatch { expected: aa.dim(), found: self.actions.len() });
        }
        Ok(())
    }
}

/// One matrix per generator `t_x` of `U`, in generator order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRepresentation {
    dim: usize,
    images: Vec<Matrix>,
    labels: Vec<String>,
}

impl GroupRepresentation {
    pub fn new(dim: usize, labels: Vec<String>, images: Vec<Matrix>) -> Result<Self, ModuleError> {
        if labels.len() != images.len() {
            return Err(ModuleError::DimensionMismatch { expected: labels.len(), found: images.len() });
        }
        if let Some(m) = images.iter().find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(ModuleError::DimensionMismatch { expected: dim, found: m.rows().max(m.cols()) });
        }
        Ok(GroupRepresentation { dim, images, labels })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn images(&self) -> &[Matrix] {
        &self.images
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// First relator of the presentation that does not evaluate to `I`.
    pub fn failing_relator(&self, u: &UniversalGroup) -> Option<Vec<String>> {
        let id = Matrix::identity(self.dim);
        u.presentation()
            .relators()
            .iter()
            .find(|r| r.iter().fold(id.clone(), |acc, &g| acc.mul(&self.images[g])) != id)
            .map(|r| u.presentation().word_labels(r))
    }

    /// `ρ(a)` for every element of `U`, along witness words.
    pub fn element_images(&self, u: &UniversalGroup) -> Vec<Matrix> {
        let g = u.group();
        let mut images = Vec::with_capacity(g.order());
        images.push(Matrix::identity(self.dim));
        for a in 1..g.order() {
            let w = g.word(a);
            let prefix = g.walk(0, &w[..w.len() - 1]);
            let img = images[prefix].mul(&self.images[w[w.len() - 1]]);
            images.push(img);
        }
        images
    }
}

/// A symmetric bilinear form `⟨m, n⟩ = m·G·nᵀ` on a module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleForm {
    pub gram: Matrix,
}

impl ModuleForm {
    pub fn new(gram: Matrix) -> Result<Self, ModuleError> {
        if !gram.is_square() || !gram.is_symmetric() {
            return Err(ModuleError::NotSymmetric);
        }
        Ok(ModuleForm { gram })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModuleViolation {
    NotDecomposable { axis: String, eigenspace_sum_dim: usize, dim: usize },
    Fusion { axis: String, phi: String, psi: String, m: Vec<String>, a: Vec<String>, product: Vec<String> },
}

impl fmt::Display for ModuleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotDecomposable { axis, eigenspace_sum_dim, dim } => {
                write!(f, "axis {axis}: eigenspaces span {eigenspace_sum_dim} of {dim} dimensions")
            }
            Self::Fusion { axis, phi, psi, product, .. } => {
                write!(f, "axis {axis}: product ({}) violates {phi} * {psi}", product.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleReport {
    pub ok: bool,
    pub witness: Option<ModuleViolation>,
    /// `(axis, [dim M^e_φ for φ ∈ Φ])`
    pub eigenspace_dims: Vec<(String, Vec<usize>)>,
}

fn module_eigenspaces(m: &AlgebraModule, e: &[Rational], eigenvalues: &[Rational]) -> Vec<Subspace> {
    let a = m.action(e);
    let id = Matrix::identity(m.dim);
    eigenvalues.iter().map(|phi| a.sub(&id.scale(phi)).left_kernel()).collect()
}

/// `M^e_φ = {m | m·e = φm}`.
pub fn module_eigenspace(m: &AlgebraModule, e: &[Rational], phi: &Rational) -> Subspace {
    m.action(e).sub(&Matrix::identity(m.dim).scale(phi)).left_kernel()
}

/// Checks, for every axis, that the module eigenspaces decompose `M` and that
/// `M^e_φ · A^e_ψ ⊆ M^e_{φ⋆ψ}` on eigenbasis pairs.
pub fn check_module(m: &AlgebraModule, aa: &AxialAlgebra) -> Result<ModuleReport, ModuleError> {
    m.require_algebra_dim(aa)?;
    let rule = aa.rule();
    let phis = rule.eigenvalues();
    let mut eigenspace_dims = Vec::new();
    for (e, label) in aa.axes().iter().zip(aa.axis_labels()) {
        let spaces = module_eigenspaces(m, e, phis);
        eigenspace_dims.push((label.clone(), spaces.iter().map(Subspace::dim).collect()));
        let refs: Vec<&Subspace> = spaces.iter().collect();
        let (direct, total) = direct_sum_of(m.dim, &refs);
        if !direct || !total.is_full() {
            let v =
                ModuleViolation::NotDecomposable { axis: label.clone(), eigenspace_sum_dim: total.dim(), dim: m.dim };
            return Ok(ModuleReport { ok: false, witness: Some(v), eigenspace_dims });
        }
        let algebra_bases: Vec<Vec<Vector>> =
            phis.iter().map(|psi| eigenspace(aa.algebra(), e, psi).basis_vectors()).collect();
        let algebra_actions: Vec<Vec<Matrix>> =
            algebra_bases.iter().map(|b| b.iter().map(|a| m.action(a)).collect()).collect();
        for i in 0..phis.len() {
            let module_basis = spaces[i].basis_vectors();
            for j in 0..phis.len() {
                let allowed: Vec<&Subspace> = rule.star(i, j).iter().map(|&k| &spaces[k]).collect();
                let (_, target) = direct_sum_of(m.dim, &allowed);
                for (a, act) in algebra_bases[j].iter().zip(&algebra_actions[j]) {
                    for v in &module_basis {
                        let w = act.apply(v);
                        if !target.contains_vector(&w) {
                            let violation = ModuleViolation::Fusion {
                                axis: label.clone(),
                                phi: format_rational(&phis[i]),
                                psi: format_rational(&phis[j]),
                                m: format_vector(v),
                                a: format_vector(a),
                                product: format_vector(&w),
                            };
                            return Ok(ModuleReport { ok: false, witness: Some(violation), eigenspace_dims });
                        }
                    }
                }
            }
        }
    }
    Ok(ModuleReport { ok: true, witness: None, eigenspace_dims })
}

/// `μ_e`: `+1` on `M^e_{Φ₊}`, `-1` on `M^e_{Φ₋}`.
pub fn mu_involution(m: &AlgebraModule, aa: &AxialAlgebra, axis: usize) -> Result<Matrix, ModuleError> {
    m.require_algebra_dim(aa)?;
    let rule = aa.rule();
    if rule.grading().is_none() {
        return Err(ModuleError::NoGrading);
    }
    let label = aa.axis_labels().get(axis).ok_or_else(|| ModuleError::UnknownAxis(axis.to_string()))?;
    let spaces = module_eigenspaces(m, &aa.axes()[axis], rule.eigenvalues());
    let mut rows = Vec::new();
    let mut signs = Vec::new();
    for (i, s) in spaces.iter().enumerate() {
        for v in s.basis_vectors() {
            rows.push(v);
            signs.push(int(rule.sign(i).expect("graded")));
        }
    }
    if rows.len() != m.dim {
        return Err(ModuleError::NotAModuleAt(label.clone()));
    }
    let p = Matrix::from_rows(m.dim, rows)?;
    let p_inv = p.inverse().map_err(|_| ModuleError::NotAModuleAt(label.clone()))?;
    let mut d = Matrix::zeros(m.dim, m.dim);
    for (i, s) in signs.into_iter().enumerate() {
        d.set(i, i, s);
    }
    let mu = p_inv.mul(&d).mul(&p);
    if !mu.mul(&mu).is_identity() {
        return Err(ModuleError::Inconsistent(format!("mu_{label} does not square to the identity")));
    }
    Ok(mu)
}

/// `t_e ↦ μ_e`, checked against every relator.
pub fn module_to_rep(
    m: &AlgebraModule,
    aa: &AxialAlgebra,
    u: &UniversalGroup,
) -> Result<GroupRepresentation, ModuleError> {
    if u.presentation().generators() != aa.axis_labels() {
        return Err(ModuleError::Inconsistent("presentation generators differ from the axis labels".into()));
    }
    let images = (0..aa.axes().len()).map(|x| mu_involution(m, aa, x)).collect::<Result<Vec<_>, _>>()?;
    let rep = GroupRepresentation::new(m.dim, aa.axis_labels().to_vec(), images)?;
    if let Some(r) = rep.failing_relator(u) {
        return Err(ModuleError::RelatorViolated(r));
    }
    Ok(rep)
}

fn matsuo_alpha(aa: &AxialAlgebra) -> Result<&Rational, ModuleError> {
    aa.alpha().ok_or(ModuleError::NotMatsuo)
}

/// Each point `x` acts as `(α/2)(I − ρ(t_x))`: zero on the `+1`-eigenspace
/// of `ρ(t_x)` and `α` on the `−1`-eigenspace. The result is checked to be a
/// module.
pub fn rep_to_module(
    rho: &GroupRepresentation,
    alpha: &Rational,
    aa: &AxialAlgebra,
) -> Result<AlgebraModule, ModuleError> {
    let expected = matsuo_alpha(aa)?;
    if expected != alpha {
        return Err(ModuleError::AlphaMismatch { given: format_rational(alpha), expected: format_rational(expected) });
    }
    if rho.images.len() != aa.dim() {
        return Err(ModuleError::DimensionMismatch { expected: aa.dim(), found: rho.images.len() });
    }
    let id = Matrix::identity(rho.dim);
    let half = alpha / int(2);
    let mut actions = Vec::with_capacity(rho.images.len());
    for (r, label) in rho.images.iter().zip(&rho.labels) {
        if !r.mul(r).is_identity() {
            return Err(ModuleError::BadInvolution(label.clone()));
        }
        actions.push(id.sub(r).scale(&half));
    }
    let module = AlgebraModule::new(rho.dim, actions)?;
    let report = check_module(&module, aa)?;
    if let Some(v) = report.witness {
        return Err(ModuleError::NotAModule(v));
    }
    Ok(module)
}

/// Right regular representation: `t_g` permutes the basis of `k[U]` by
/// right multiplication.
pub fn regular_representation(u: &UniversalGroup) -> GroupRepresentation {
    let n = u.order();
    let images = (0..u.presentation().generators().len())
        .map(|g| {
            let mut m = Matrix::zeros(n, n);
            for (c, row) in u.group().right_table().iter().enumerate() {
                m.set(c, row[g], Rational::one());
            }
            m
        })
        .collect();
    GroupRepresentation { dim: n, images, labels: u.presentation().generators().to_vec() }
}

/// One-dimensional representation with every `t_x ↦ sign`.
pub fn scalar_representation(labels: &[String], sign: i64) -> GroupRepresentation {
    let m = Matrix::from_ints(&[&[sign]]);
    GroupRepresentation { dim: 1, images: vec![m; labels.len()], labels: labels.to_vec() }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleRoundtrip {
    pub fixed_point: bool,
}

/// `rep_to_module(module_to_rep(M)) = M` for modules with all `M^x₁ = 0`.
pub fn roundtrip_check(
    m: &AlgebraModule,
    aa: &AxialAlgebra,
    u: &UniversalGroup,
) -> Result<ModuleRoundtrip, ModuleError> {
    let alpha = matsuo_alpha(aa)?.clone();
    for (e, label) in aa.axes().iter().zip(aa.axis_labels()) {
        if !module_eigenspace(m, e, &Rational::one()).is_zero() {
            return Err(ModuleError::NontrivialOneEigenspace(label.clone()));
        }
    }
    let rep = module_to_rep(m, aa, u)?;
    let back = rep_to_module(&rep, &alpha, aa)?;
    Ok(ModuleRoundtrip { fixed_point: back == *m })
}

/// The algebra acting on itself by right multiplication.
pub fn regular_module(aa: &AxialAlgebra) -> AlgebraModule {
    let n = aa.dim();
    let actions = (0..n).map(|i| aa.algebra().right_mult_matrix(&unit_vector(n, i))).collect();
    AlgebraModule { dim: n, actions }
}

/// `⟨m·a, n⟩ = ⟨m, n·a⟩` on all basis triples.
pub fn frobenius_module_check(m: &AlgebraModule, form: &ModuleForm, aa: &AxialAlgebra) -> Result<bool, ModuleError> {
    m.require_algebra_dim(aa)?;
    if form.gram.rows() != m.dim {
        return Err(ModuleError::DimensionMismatch { expected: m.dim, found: form.gram.rows() });
    }
    Ok(m.actions.iter().all(|a| a.mul(&form.gram).is_symmetric()))
}

/// Whether `n · A ⊆ n`.
pub fn is_submodule(m: &AlgebraModule, n: &Subspace) -> bool {
    let basis = n.basis_vectors();
    m.actions.iter().all(|a| basis.iter().all(|v| n.contains_vector(&a.apply(v))))
}

/// The orthogonal complement of a submodule under a Frobenius form, checked
/// to be a complementary submodule.
pub fn maschke_complement(
    m: &AlgebraModule,
    form: &ModuleForm,
    n: &Subspace,
    aa: &AxialAlgebra,
) -> Result<Subspace, ModuleError> {
    if n.ambient_dim() != m.dim {
        return Err(ModuleError::DimensionMismatch { expected: m.dim, found: n.ambient_dim() });
    }
    if !is_submodule(m, n) {
        return Err(ModuleError::NotASubmodule);
    }
    if !frobenius_module_check(m, form, aa)? {
        return Err(ModuleError::NotFrobenius);
    }
    if !n.is_zero() {
        let restricted = n.basis().mul(&form.gram).mul(&n.basis().transpose());
        if restricted.det()?.is_zero() {
            return Err(ModuleError::DegenerateOnN);
        }
    }
    let complement = n.orthogonal_complement(&form.gram);
    let (direct, total) = direct_sum_of(m.dim, &[n, &complement]);
    if !direct || !total.is_full() || !is_submodule(m, &complement) {
        return Err(ModuleError::Inconsistent("orthogonal complement is not a complementary submodule".into()));
    }
    Ok(complement)
}

/// Block-diagonal sum of two modules over the same algebra.
pub fn direct_sum(a: &AlgebraModule, b: &AlgebraModule) -> Result<AlgebraModule, ModuleError> {
    if a.actions.len() != b.actions.len() {
        return Err(ModuleError::DimensionMismatch { expected: a.actions.len(), found: b.actions.len() });
    }
    let actions = a.actions.iter().zip(&b.actions).map(|(x, y)| x.direct_sum(y)).collect();
    Ok(AlgebraModule { dim: a.dim + b.dim, actions })
}

/// `M/N` in the basis of unit vectors at the non-pivot positions of `N`,
/// with the projection matrix `M → M/N`.
pub fn quotient_module(m: &AlgebraModule, n: &Subspace) -> Result<(AlgebraModule, Matrix), ModuleError> {
    if !is_submodule(m, n) {
        return Err(ModuleError::NotASubmodule);
    }
    let pivots: HashSet<usize> = n.pivots().iter().copied().collect();
    let free: Vec<usize> = (0..m.dim).filter(|j| !pivots.contains(j)).collect();
    let q = free.len();
    let project = |v: &[Rational]| -> Vector {
        let r = n.reduce(v);
        free.iter().map(|&j| r[j].clone()).collect()
    };
    let projection = Matrix::from_rows(q, (0..m.dim).map(|i| project(&unit_vector(m.dim, i))).collect())?;
    let actions = m
        .actions
        .iter()
        .map(|a| Matrix::from_rows(q, free.iter().map(|&j| project(a.row(j))).collect()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((AlgebraModule { dim: q, actions }, projection))
}

/// The vectors `m_y` for all points, built from a seed `m ∈ M^x₁`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AveragedFamily {
    pub point: usize,
    pub m_points: Vec<Vector>,
    pub u_x_order: usize,
}

fn require_connected_matsuo(aa: &AxialAlgebra) -> Result<&TripleSystem, ModuleError> {
    let ts = &aa.matsuo_origin().ok_or(ModuleError::NotMatsuo)?.system;
    if !ts.is_connected() || ts.has_isolated_points() {
        return Err(ModuleError::NotConnected);
    }
    Ok(ts)
}

/// `m_x = Σ_{μ ∈ U_x} seed·μ` with `U_x = μ(C_U(t_x))`, and
/// `m_y = m_x·μ(t)` for any `t` with `(t_x)^t = t_y`. Checks that the result
/// does not depend on `t`, that `m_y ∈ M^y₁`, and equivariance
/// `m_y·μ_z = m_{y^{τ_z}}`.
pub fn averaged_family(
    m: &AlgebraModule,
    aa: &AxialAlgebra,
    u: &UniversalGroup,
    x: usize,
    seed: &[Rational],
) -> Result<AveragedFamily, ModuleError> {
    let ts = require_connected_matsuo(aa)?;
    let n = ts.num_points();
    if x >= n {
        return Err(ModuleError::UnknownAxis(x.to_string()));
    }
    if seed.len() != m.dim {
        return Err(ModuleError::DimensionMismatch { expected: m.dim, found: seed.len() });
    }
    let ex = unit_vector(n, x);
    if is_zero_vector(seed) || m.act(seed, &ex) != seed {
        return Err(ModuleError::SeedNotOneEigenvector);
    }
    let rep = module_to_rep(m, aa, u)?;
    let mu = rep.element_images(u);
    let g = u.group();

    let tx = u.generator(x);
    let centralizer = g.centralizer(tx)?;
    let mut u_x: Vec<&Matrix> = Vec::new();
    let mut seen = HashSet::new();
    for &c in &centralizer.elements {
        if seen.insert(&mu[c]) {
            u_x.push(&mu[c]);
        }
    }
    let mut m_x = zero_vector(m.dim);
    for mat in &u_x {
        for (acc, v) in m_x.iter_mut().zip(mat.apply(seed)) {
            *acc += v;
        }
    }

    let mut m_points = Vec::with_capacity(n);
    for y in 0..n {
        let ty = u.generator(y);
        let conjugators: Vec<usize> = (0..g.order()).filter(|&t| g.conjugate(tx, t) == ty).collect();
        let (first, last) = match (conjugators.first(), conjugators.last()) {
            (Some(&f), Some(&l)) => (f, l),
            _ => return Err(ModuleError::NotConnected),
        };
        let m_y = mu[first].apply(&m_x);
        if mu[last].apply(&m_x) != m_y {
            return Err(ModuleError::Inconsistent(format!("m_{} depends on the conjugating element", ts.label(y))));
        }
        if m.act(&m_y, &unit_vector(n, y)) != m_y {
            return Err(ModuleError::Inconsistent(format!("m_{} is not a 1-eigenvector", ts.label(y))));
        }
        m_points.push(m_y);
    }
    for (z, mu_z) in rep.images().iter().enumerate() {
        let tau = ts.tau(z);
        for y in 0..n {
            if mu_z.apply(&m_points[y]) != m_points[tau.apply(y)] {
                return Err(ModuleError::Inconsistent("averaged family is not equivariant".into()));
            }
        }
    }
    Ok(AveragedFamily { point: x, m_points, u_x_order: u_x.len() })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeedOutcome {
    pub seed: Vec<String>,
    pub m_x_nonzero: bool,
}

/// Runs [`averaged_family`] on each basis vector of `M^x₁`.
pub fn seed_sweep(
    m: &AlgebraModule,
    aa: &AxialAlgebra,
    u: &UniversalGroup,
    x: usize,
) -> Result<Vec<SeedOutcome>, ModuleError> {
    let ex = unit_vector(aa.dim(), x);
    module_eigenspace(m, &ex, &Rational::one())
        .basis_vectors()
        .into_iter()
        .map(|seed| {
            let family = averaged_family(m, aa, u, x, &seed)?;
            Ok(SeedOutcome { seed: format_vector(&seed), m_x_nonzero: !is_zero_vector(&family.m_points[x]) })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularMapReport {
    /// Row `y` is `m_y`.
    pub hom: Matrix,
    pub relations_hold: bool,
    pub is_hom: bool,
    pub rank: usize,
    pub injective: bool,
}

/// The linear map `y ↦ m_y` from the regular module. `relations_hold`
/// checks `m_z·z = m_z`, `m_y·z = 0` for `y ≁ z`, and for `y ∼ z`
/// `(m_y + m_{y∧z} − αm_z)·z = 0` and `(m_y − m_{y∧z})·z = α(m_y − m_{y∧z})`;
/// `is_hom` checks `φ(y·z) = m_y·z` directly. When `m_x ≠ 0` and the Gram
/// matrix `I + (α/2)A` is nondegenerate the map must be injective.
pub fn regular_map(
    m: &AlgebraModule,
    aa: &AxialAlgebra,
    family: &AveragedFamily,
) -> Result<RegularMapReport, ModuleError> {
    let ts = require_connected_matsuo(aa)?;
    let alpha = matsuo_alpha(aa)?;
    let n = ts.num_points();
    let hom = Matrix::from_rows(m.dim, family.m_points.clone())?;
    let mv = &family.m_points;
    let act = |v: &[Rational], z: usize| m.act(v, &unit_vector(n, z));
    let mut relations_hold = true;
    for z in 0..n {
        relations_hold &= act(&mv[z], z) == mv[z];
        for y in (0..n).filter(|&y| y != z) {
            match ts.wedge(y, z) {
                None => relations_hold &= is_zero_vector(&act(&mv[y], z)),
                Some(w) => {
                    let mut zero_part = mv[y].clone();
                    for (i, c) in zero_part.iter_mut().enumerate() {
                        *c += &mv[w][i] - alpha * &mv[z][i];
                    }
                    relations_hold &= is_zero_vector(&act(&zero_part, z));
                    let diff: Vector = mv[y].iter().zip(&mv[w]).map(|(a, b)| a - b).collect();
                    relations_hold &= act(&diff, z) == scale_vector(alpha, &diff);
                }
            }
        }
    }
    let is_hom = (0..n).all(|y| (0..n).all(|z| hom.apply(aa.algebra().product(y, z)) == act(&mv[y], z)));
    let rank = hom.rank();
    let injective = rank == n;
    let nonzero = !is_zero_vector(&mv[family.point]);
    if nonzero && is_hom && !injective && !frobenius_gram(ts, alpha).det()?.is_zero() {
        return Err(ModuleError::Inconsistent("nonzero regular map with nondegenerate form is not injective".into()));
    }
    Ok(RegularMapReport { hom, relations_hold, is_hom, rank, injective })
}

/// Splits a Matsuo algebra along the connected components of its geometry
/// (isolated points give 1-dimensional factors), after checking that all
/// products between different components vanish.
pub fn component_decompose(aa: &AxialAlgebra) -> Result<Vec<AxialAlgebra>, ModuleError> {
    let origin = aa.matsuo_origin().ok_or(ModuleError::NotMatsuo)?;
    let geometry = origin.system.geometry();
    let comps = connected_components(geometry);
    let mut parts: Vec<PointLineGeometry> = comps.components;
    for label in &comps.isolated {
        parts.push(PointLineGeometry::new(vec![label.clone()], Vec::<Vec<String>>::new())?);
    }
    let mut component_of = vec![usize::MAX; geometry.num_points()];
    for (k, part) in parts.iter().enumerate() {
        for p in part.points() {
            component_of[geometry.require_point(p)?] = k;
        }
    }
    for x in 0..geometry.num_points() {
        for y in 0..geometry.num_points() {
            if component_of[x] != component_of[y] && !is_zero_vector(aa.algebra().product(x, y)) {
                return Err(ModuleError::Inconsistent("product across components is nonzero".into()));
            }
        }
    }
    parts.into_iter().map(|g| Ok(matsuo_system(&TripleSystem::new(g)?, &origin.alpha)?)).collect()
}
