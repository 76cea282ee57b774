//! Commutative algebras given by structure constants, fusion rules, axes and
//! Matsuo algebras.
//!
//! Vectors are coordinate rows in the algebra's basis; the right
//! multiplication map of `e` is the matrix whose row `i` is `bᵢ·e`, so
//! `v·R_e = v e`.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exactlin::{
    direct_sum_of, format_rational, format_vector, int, rat, scale_vector, unit_vector, zero_vector, LinError, Matrix,
    Rational, Subspace, Vector,
};
use crate::geometry::{constant_lines_per_point, FischerSpace, GeometryError, TripleSystem};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("alpha must not be 0 or 1, got {0}")]
    BadAlpha(String),
    #[error("plus and minus do not partition the eigenvalues")]
    NotAPartition,
    #[error("fusion rule has no Z/2-grading")]
    NoGrading,
    #[error("invalid fusion rule: {0}")]
    BadRule(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("products of basis elements {0} and {1} differ")]
    NotCommutative(usize, usize),
    #[error("{0} is not an axis of the algebra")]
    NotAnAxis(String),
    #[error("Miyamoto map of {0} is not an automorphism")]
    NotAutomorphism(String),
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("the Fischer space is not connected")]
    NotConnected,
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// A Z/2-grading `Φ = Φ₊ ⊔ Φ₋` as index sets into the eigenvalue list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
}

/// Eigenvalues `Φ` with a symmetric table `φ⋆ψ ⊆ Φ`, stored by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionRule {
    eigenvalues: Vec<Rational>,
    star: Vec<Vec<Vec<usize>>>,
    grading: Option<Grading>,
}

impl FusionRule {
    /// `star` lists `(φ, ψ, φ⋆ψ)` entries by eigenvalue; missing pairs mean
    /// `∅`, and each unordered pair may be given in either order.
    pub fn new(
        eigenvalues: Vec<Rational>,
        star: &[(Rational, Rational, Vec<Rational>)],
        grading: Option<(Vec<Rational>, Vec<Rational>)>,
    ) -> Result<Self, AlgebraError> {
        let n = eigenvalues.len();
        for i in 0..n {
            if eigenvalues[..i].contains(&eigenvalues[i]) {
                return Err(AlgebraError::BadRule(format!("repeated eigenvalue {}", eigenvalues[i])));
            }
        }
        let index = |x: &Rational| {
            eigenvalues
                .iter()
                .position(|e| e == x)
                .ok_or_else(|| AlgebraError::BadRule(format!("unknown eigenvalue {x}")))
        };
        let mut table: Vec<Vec<Option<Vec<usize>>>> = vec![vec![None; n]; n];
        for (a, b, set) in star {
            let (i, j) = (index(a)?, index(b)?);
            let mut idx = set.iter().map(index).collect::<Result<Vec<_>, _>>()?;
            idx.sort_unstable();
            idx.dedup();
            for (p, q) in [(i, j), (j, i)] {
                match &table[p][q] {
                    Some(prev) if *prev != idx => {
                        return Err(AlgebraError::BadRule(format!("star of {a} and {b} is not symmetric")))
                    }
                    _ => table[p][q] = Some(idx.clone()),
                }
            }
        }
        let star = table.into_iter().map(|row| row.into_iter().map(Option::unwrap_or_default).collect()).collect();
        let mut rule = FusionRule { eigenvalues, star, grading: None };
        if let Some((plus, minus)) = grading {
            if !check_grading(&rule, &plus, &minus)? {
                return Err(AlgebraError::BadRule("grading is not compatible with the star table".into()));
            }
            let plus = plus.iter().filter_map(|x| rule.index_of(x)).collect();
            let minus = minus.iter().filter_map(|x| rule.index_of(x)).collect();
            rule.grading = Some(Grading { plus, minus });
        }
        Ok(rule)
    }

    pub fn eigenvalues(&self) -> &[Rational] {
        &self.eigenvalues
    }

    pub fn index_of(&self, phi: &Rational) -> Option<usize> {
        self.eigenvalues.iter().position(|e| e == phi)
    }

    /// `φᵢ⋆φⱼ` as eigenvalue indices.
    pub fn star(&self, i: usize, j: usize) -> &[usize] {
        &self.star[i][j]
    }

    /// `φ⋆ψ` as eigenvalues, or `None` if either is not in `Φ`.
    pub fn star_values(&self, phi: &Rational, psi: &Rational) -> Option<Vec<Rational>> {
        let (i, j) = (self.index_of(phi)?, self.index_of(psi)?);
        Some(self.star[i][j].iter().map(|&k| self.eigenvalues[k].clone()).collect())
    }

    pub fn grading(&self) -> Option<&Grading> {
        self.grading.as_ref()
    }

    /// `+1` for `Φ₊`, `-1` for `Φ₋`.
    pub fn sign(&self, i: usize) -> Option<i64> {
        let g = self.grading.as_ref()?;
        Some(if g.minus.contains(&i) { -1 } else { 1 })
    }
}

fn parse_alpha(alpha: &Rational) -> Result<(), AlgebraError> {
    if alpha.is_zero() || alpha.is_one() {
        return Err(AlgebraError::BadAlpha(format_rational(alpha)));
    }
    Ok(())
}

/// The Jordan fusion rule `Φ(α)` on `{1, 0, α}`, graded by `{1,0} | {α}`.
pub fn jordan_rule(alpha: &Rational) -> Result<FusionRule, AlgebraError> {
    parse_alpha(alpha)?;
    let (one, zero, a) = (int(1), int(0), alpha.clone());
    FusionRule::new(
        vec![one.clone(), zero.clone(), a.clone()],
        &[
            (one.clone(), one.clone(), vec![one.clone()]),
            (one.clone(), a.clone(), vec![a.clone()]),
            (zero.clone(), zero.clone(), vec![zero.clone()]),
            (zero.clone(), a.clone(), vec![a.clone()]),
            (a.clone(), a.clone(), vec![one.clone(), zero.clone()]),
        ],
        Some((vec![one, zero], vec![a])),
    )
}

/// The fusion rule of the Griess algebra on `{1, 0, 1/4, 1/32}`, graded by
/// `{1, 0, 1/4} | {1/32}`.
pub fn griess_rule() -> FusionRule {
    let (one, zero, q, t) = (int(1), int(0), rat(1, 4), rat(1, 32));
    FusionRule::new(
        vec![one.clone(), zero.clone(), q.clone(), t.clone()],
        &[
            (one.clone(), one.clone(), vec![one.clone()]),
            (one.clone(), q.clone(), vec![q.clone()]),
            (one.clone(), t.clone(), vec![t.clone()]),
            (zero.clone(), zero.clone(), vec![zero.clone()]),
            (zero.clone(), q.clone(), vec![q.clone()]),
            (zero.clone(), t.clone(), vec![t.clone()]),
            (q.clone(), q.clone(), vec![one.clone(), zero.clone()]),
            (q.clone(), t.clone(), vec![t.clone()]),
            (t.clone(), t.clone(), vec![one.clone(), zero.clone(), q.clone()]),
        ],
        Some((vec![one, zero, q], vec![t])),
    )
    .expect("Griess table is well formed")
}

/// Whether `(plus, minus)` is a Z/2-grading of the rule.
pub fn check_grading(rule: &FusionRule, plus: &[Rational], minus: &[Rational]) -> Result<bool, AlgebraError> {
    let n = rule.eigenvalues.len();
    let mut side = vec![None; n];
    for (set, s) in [(plus, true), (minus, false)] {
        for x in set {
            let i = rule.index_of(x).ok_or(AlgebraError::NotAPartition)?;
            if side[i].is_some() {
                return Err(AlgebraError::NotAPartition);
            }
            side[i] = Some(s);
        }
    }
    let side: Vec<bool> = side.into_iter().collect::<Option<_>>().ok_or(AlgebraError::NotAPartition)?;
    for i in 0..n {
        for j in 0..n {
            // φ⋆ψ must lie in Φ₊ when the signs agree and in Φ₋ otherwise
            let expected = side[i] == side[j];
            if rule.star[i][j].iter().any(|&k| side[k] != expected) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A commutative algebra with labelled basis and structure constants
/// `bᵢ·bⱼ = products[i][j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    basis: Vec<String>,
    products: Vec<Vec<Vector>>,
}

impl Algebra {
    pub fn new(basis: Vec<String>, products: Vec<Vec<Vector>>) -> Result<Self, AlgebraError> {
        let n = basis.len();
        if products.len() != n {
            return Err(AlgebraError::DimensionMismatch { expected: n, found: products.len() });
        }
        for row in &products {
            if row.len() != n {
                return Err(AlgebraError::DimensionMismatch { expected: n, found: row.len() });
            }
            if let Some(v) = row.iter().find(|v| v.len() != n) {
                return Err(AlgebraError::DimensionMismatch { expected: n, found: v.len() });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if products[i][j] != products[j][i] {
                    return Err(AlgebraError::NotCommutative(i, j));
                }
            }
        }
        Ok(Algebra { basis, products })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis
    }

    pub fn product(&self, i: usize, j: usize) -> &Vector {
        &self.products[i][j]
    }

    pub fn products(&self) -> &[Vec<Vector>] {
        &self.products
    }

    pub fn mul(&self, u: &[Rational], v: &[Rational]) -> Vector {
        let n = self.dim();
        let mut out = zero_vector(n);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let c = ui * vj;
                for (o, p) in out.iter_mut().zip(&self.products[i][j]) {
                    if !p.is_zero() {
                        *o += &c * p;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `v ↦ v·e`.
    pub fn right_mult_matrix(&self, e: &[Rational]) -> Matrix {
        let n = self.dim();
        let rows = (0..n).map(|i| self.mul(&unit_vector(n, i), e)).collect();
        Matrix::from_rows(n, rows).expect("square")
    }

    /// Smallest multiplication-closed subspace containing `vectors`.
    pub fn generated_subalgebra(&self, vectors: &[Vector]) -> Subspace {
        let mut span = Subspace::span(self.dim(), vectors);
        loop {
            let basis = span.basis_vectors();
            let mut rows = basis.clone();
            for (i, u) in basis.iter().enumerate() {
                for v in &basis[i..] {
                    rows.push(self.mul(u, v));
                }
            }
            let next = Subspace::span(self.dim(), &rows);
            if next.dim() == span.dim() {
                return span;
            }
            span = next;
        }
    }
}

/// `A^e_φ`: vectors `v` with `v·e = φv`.
pub fn eigenspace(a: &Algebra, e: &[Rational], phi: &Rational) -> Subspace {
    let m = a.right_mult_matrix(e).sub(&Matrix::identity(a.dim()).scale(phi));
    m.left_kernel()
}

fn eigenspaces(a: &Algebra, e: &[Rational], rule: &FusionRule) -> Vec<Subspace> {
    let r = a.right_mult_matrix(e);
    let id = Matrix::identity(a.dim());
    rule.eigenvalues().iter().map(|phi| r.sub(&id.scale(phi)).left_kernel()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AxisViolation {
    NotIdempotent { square: Vec<String> },
    NotDiagonalizable { eigenspace_sum_dim: usize, dim: usize },
    Fusion { phi: String, psi: String, u: Vec<String>, v: Vec<String>, product: Vec<String>, allowed: Vec<String> },
}

impl fmt::Display for AxisViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotIdempotent { .. } => write!(f, "axis is not idempotent"),
            Self::NotDiagonalizable { eigenspace_sum_dim, dim } => {
                write!(f, "eigenspaces span {eigenspace_sum_dim} of {dim} dimensions")
            }
            Self::Fusion { phi, psi, u, v, product, allowed } => write!(
                f,
                "({}) * ({}) = ({}) is not in the sum of eigenspaces {{{}}} for {phi} * {psi}",
                u.join(", "),
                v.join(", "),
                product.join(", "),
                allowed.join(", ")
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxisReport {
    pub ok: bool,
    pub witness: Option<AxisViolation>,
}

/// Checks idempotence, diagonalisability over `Φ` and fusion on eigenbasis
/// pairs.
pub fn check_axis(a: &Algebra, e: &[Rational], rule: &FusionRule) -> AxisReport {
    let fail = |v| AxisReport { ok: false, witness: Some(v) };
    let square = a.mul(e, e);
    if square != e {
        return fail(AxisViolation::NotIdempotent { square: format_vector(&square) });
    }
    let spaces = eigenspaces(a, e, rule);
    let refs: Vec<&Subspace> = spaces.iter().collect();
    let (direct, total) = direct_sum_of(a.dim(), &refs);
    if !direct || !total.is_full() {
        return fail(AxisViolation::NotDiagonalizable { eigenspace_sum_dim: total.dim(), dim: a.dim() });
    }
    let bases: Vec<Vec<Vector>> = spaces.iter().map(Subspace::basis_vectors).collect();
    let n = rule.eigenvalues().len();
    for i in 0..n {
        for j in i..n {
            let allowed: Vec<&Subspace> = rule.star(i, j).iter().map(|&k| &spaces[k]).collect();
            let (_, target) = direct_sum_of(a.dim(), &allowed);
            for u in &bases[i] {
                for v in &bases[j] {
                    let w = a.mul(u, v);
                    if !target.contains_vector(&w) {
                        return fail(AxisViolation::Fusion {
                            phi: format_rational(&rule.eigenvalues()[i]),
                            psi: format_rational(&rule.eigenvalues()[j]),
                            u: format_vector(u),
                            v: format_vector(v),
                            product: format_vector(&w),
                            allowed: rule.star(i, j).iter().map(|&k| format_rational(&rule.eigenvalues()[k])).collect(),
                        });
                    }
                }
            }
        }
    }
    AxisReport { ok: true, witness: None }
}

/// The Fischer space and parameter a Matsuo algebra was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatsuoOrigin {
    pub system: TripleSystem,
    pub alpha: Rational,
}

/// An algebra with a distinguished axis set `Ω` and a fusion rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxialAlgebra {
    algebra: Algebra,
    axes: Vec<Vector>,
    axis_labels: Vec<String>,
    rule: FusionRule,
    origin: Option<MatsuoOrigin>,
}

impl AxialAlgebra {
    /// Only dimensions are checked here; use [`check_axial`] for the axioms.
    pub fn new(
        algebra: Algebra,
        axes: Vec<Vector>,
        axis_labels: Vec<String>,
        rule: FusionRule,
    ) -> Result<Self, AlgebraError> {
        if axes.len() != axis_labels.len() {
            return Err(AlgebraError::DimensionMismatch { expected: axes.len(), found: axis_labels.len() });
        }
        if let Some(v) = axes.iter().find(|v| v.len() != algebra.dim()) {
            return Err(AlgebraError::DimensionMismatch { expected: algebra.dim(), found: v.len() });
        }
        Ok(AxialAlgebra { algebra, axes, axis_labels, rule, origin: None })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn axes(&self) -> &[Vector] {
        &self.axes
    }

    pub fn axis_labels(&self) -> &[String] {
        &self.axis_labels
    }

    pub fn rule(&self) -> &FusionRule {
        &self.rule
    }

    pub fn matsuo_origin(&self) -> Option<&MatsuoOrigin> {
        self.origin.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn axis_index(&self, v: &[Rational]) -> Option<usize> {
        self.axes.iter().position(|a| a.as_slice() == v)
    }

    pub fn axis_by_label(&self, label: &str) -> Option<usize> {
        self.axis_labels.iter().position(|l| l == label)
    }

    /// The same algebra with `Ω` replaced by the listed axes. A Matsuo origin
    /// is kept only if all points remain axes.
    pub fn with_axes(&self, indices: &[usize]) -> AxialAlgebra {
        let keep_origin = indices.len() == self.axes.len();
        AxialAlgebra {
            algebra: self.algebra.clone(),
            axes: indices.iter().map(|&i| self.axes[i].clone()).collect(),
            axis_labels: indices.iter().map(|&i| self.axis_labels[i].clone()).collect(),
            rule: self.rule.clone(),
            origin: if keep_origin { self.origin.clone() } else { None },
        }
    }

    pub fn alpha(&self) -> Option<&Rational> {
        self.origin.as_ref().map(|o| &o.alpha)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AxialViolation {
    Axis { axis: String, violation: AxisViolation },
    Generation { generated_dim: usize, dim: usize },
}

impl fmt::Display for AxialViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Axis { axis, violation } => write!(f, "axis {axis}: {violation}"),
            Self::Generation { generated_dim, dim } => {
                write!(f, "axes generate a subalgebra of dimension {generated_dim} < {dim}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxialReport {
    pub ok: bool,
    pub witness: Option<AxialViolation>,
}

pub fn check_axial(aa: &AxialAlgebra) -> AxialReport {
    for (e, label) in aa.axes.iter().zip(&aa.axis_labels) {
        if let Some(violation) = check_axis(&aa.algebra, e, &aa.rule).witness {
            return AxialReport { ok: false, witness: Some(AxialViolation::Axis { axis: label.clone(), violation }) };
        }
    }
    let generated = aa.algebra.generated_subalgebra(&aa.axes);
    if !generated.is_full() {
        return AxialReport {
            ok: false,
            witness: Some(AxialViolation::Generation { generated_dim: generated.dim(), dim: aa.dim() }),
        };
    }
    AxialReport { ok: true, witness: None }
}

/// `τ_e`: `+1` on `A^e_{Φ₊}`, `-1` on `A^e_{Φ₋}`. Verified to be an
/// involutive automorphism.
pub fn miyamoto_matrix(aa: &AxialAlgebra, e: &[Rational]) -> Result<Matrix, AlgebraError> {
    let a = &aa.algebra;
    let rule = &aa.rule;
    if rule.grading().is_none() {
        return Err(AlgebraError::NoGrading);
    }
    let name = || format_vector(e).join(",");
    let spaces = eigenspaces(a, e, rule);
    let mut rows = Vec::new();
    let mut signs = Vec::new();
    for (i, s) in spaces.iter().enumerate() {
        let sign = int(rule.sign(i).expect("graded"));
        for v in s.basis_vectors() {
            rows.push(v);
            signs.push(sign.clone());
        }
    }
    let n = a.dim();
    if rows.len() != n {
        return Err(AlgebraError::NotAnAxis(name()));
    }
    let p = Matrix::from_rows(n, rows)?;
    let p_inv = p.inverse().map_err(|_| AlgebraError::NotAnAxis(name()))?;
    let mut d = Matrix::zeros(n, n);
    for (i, s) in signs.into_iter().enumerate() {
        d.set(i, i, s);
    }
    let tau = p_inv.mul(&d).mul(&p);
    if !tau.mul(&tau).is_identity() || !is_automorphism(a, &tau) {
        return Err(AlgebraError::NotAutomorphism(name()));
    }
    Ok(tau)
}

/// `(bᵢ bⱼ)·T = (bᵢ·T)(bⱼ·T)` on all basis pairs.
pub fn is_automorphism(a: &Algebra, t: &Matrix) -> bool {
    let n = a.dim();
    let images: Vec<Vector> = t.row_vectors();
    (0..n).all(|i| (i..n).all(|j| t.apply(a.product(i, j)) == a.mul(&images[i], &images[j])))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    pub ok: bool,
    pub closure: Vec<Vector>,
}

/// Checks `Ω^{τ_e} ⊆ Ω` for all `e ∈ Ω`; `closure` is the orbit of `Ω` under
/// the Miyamoto group, listing `Ω` first.
pub fn miyamoto_closed(aa: &AxialAlgebra) -> Result<ClosureReport, AlgebraError> {
    let taus = aa.axes.iter().map(|e| miyamoto_matrix(aa, e)).collect::<Result<Vec<_>, _>>()?;
    let mut closure: Vec<Vector> = aa.axes.clone();
    let mut head = 0;
    while head < closure.len() {
        for t in &taus {
            let image = t.apply(&closure[head]);
            if !closure.contains(&image) {
                closure.push(image);
            }
        }
        head += 1;
    }
    Ok(ClosureReport { ok: closure.len() == aa.axes.len(), closure })
}

/// The Matsuo algebra `M_α` of a partial triple system, with `Ω` the points.
pub fn matsuo_system(ts: &TripleSystem, alpha: &Rational) -> Result<AxialAlgebra, AlgebraError> {
    let rule = jordan_rule(alpha)?;
    let n = ts.num_points();
    let half = alpha / int(2);
    let mut products = vec![vec![zero_vector(n); n]; n];
    for x in 0..n {
        products[x][x][x] = Rational::one();
        for y in 0..n {
            if let Some(z) = ts.wedge(x, y) {
                let v = &mut products[x][y];
                v[x] = half.clone();
                v[y] = half.clone();
                v[z] = -half.clone();
            }
        }
    }
    let labels: Vec<String> = ts.geometry().points().to_vec();
    let algebra = Algebra::new(labels.clone(), products)?;
    let axes = (0..n).map(|i| unit_vector(n, i)).collect();
    let mut aa = AxialAlgebra::new(algebra, axes, labels, rule)?;
    aa.origin = Some(MatsuoOrigin { system: ts.clone(), alpha: alpha.clone() });
    Ok(aa)
}

pub fn matsuo(fs: &FischerSpace, alpha: &Rational) -> Result<AxialAlgebra, AlgebraError> {
    matsuo_system(fs.system(), alpha)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatsuoEigenbasis {
    pub one: Subspace,
    pub zero: Subspace,
    pub alpha_sp: Subspace,
}

impl MatsuoEigenbasis {
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.one.dim(), self.zero.dim(), self.alpha_sp.dim())
    }
}

/// The eigenspaces of point `x` from explicit spanning sets:
/// `⟨x⟩`, `⟨y + x∧y − αx | y ∼ x⟩ ⊕ ⟨y | y ≁ x, y ≠ x⟩` and
/// `⟨y − x∧y | y ∼ x⟩`. Each is checked against the kernel computation.
pub fn matsuo_eigenbasis(fs: &FischerSpace, alpha: &Rational, x: &str) -> Result<MatsuoEigenbasis, AlgebraError> {
    let aa = matsuo(fs, alpha)?;
    let xi = fs.geometry().require_point(x)?;
    let n = fs.num_points();
    let e = |i| unit_vector(n, i);
    let mut zero_span = Vec::new();
    let mut alpha_span = Vec::new();
    for y in (0..n).filter(|&y| y != xi) {
        match fs.wedge(xi, y) {
            Some(z) => {
                let mut v = e(y);
                v[z] += Rational::one();
                v[xi] -= alpha;
                zero_span.push(v);
                let mut w = e(y);
                w[z] -= Rational::one();
                alpha_span.push(w);
            }
            None => zero_span.push(e(y)),
        }
    }
    let basis = MatsuoEigenbasis {
        one: Subspace::span(n, &[e(xi)]),
        zero: Subspace::span(n, &zero_span),
        alpha_sp: Subspace::span(n, &alpha_span),
    };
    let axis = e(xi);
    for (space, phi) in [(&basis.one, int(1)), (&basis.zero, int(0)), (&basis.alpha_sp, alpha.clone())] {
        if *space != eigenspace(aa.algebra(), &axis, &phi) {
            return Err(AlgebraError::Inconsistent(format!(
                "spanning set for eigenvalue {} differs from the eigenspace",
                format_rational(&phi)
            )));
        }
    }
    let (direct, total) = direct_sum_of(n, &[&basis.one, &basis.zero, &basis.alpha_sp]);
    if !direct || !total.is_full() {
        return Err(AlgebraError::Inconsistent("eigenspaces do not decompose the algebra".into()));
    }
    Ok(basis)
}

/// `I + (α/2)·A` with `A` the collinearity matrix.
pub fn frobenius_gram(ts: &TripleSystem, alpha: &Rational) -> Matrix {
    let n = ts.num_points();
    Matrix::identity(n).add(&ts.collinearity_matrix().scale(&(alpha / int(2))))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrobeniusReport {
    pub associative: bool,
    pub eigen_orthogonal: bool,
    pub nondegenerate: bool,
    pub det: String,
}

/// Tests `⟨xa, b⟩ = ⟨a, xb⟩` on basis triples, perpendicularity of distinct
/// eigenspaces of every axis, and `det G ≠ 0`.
pub fn frobenius_check(aa: &AxialAlgebra, gram: &Matrix) -> Result<FrobeniusReport, AlgebraError> {
    let n = aa.dim();
    if gram.rows() != n || gram.cols() != n {
        return Err(AlgebraError::DimensionMismatch { expected: n, found: gram.rows().max(gram.cols()) });
    }
    if !gram.is_symmetric() {
        return Err(AlgebraError::NotSymmetric);
    }
    let associative = (0..n).all(|x| {
        let lg = aa.algebra.right_mult_matrix(&unit_vector(n, x)).mul(gram);
        lg.is_symmetric()
    });
    let mut eigen_orthogonal = true;
    'axes: for e in &aa.axes {
        let spaces = eigenspaces(&aa.algebra, e, &aa.rule);
        for i in 0..spaces.len() {
            for j in i + 1..spaces.len() {
                if spaces[i].is_zero() || spaces[j].is_zero() {
                    continue;
                }
                if !spaces[i].basis().mul(gram).mul(&spaces[j].basis().transpose()).is_zero() {
                    eigen_orthogonal = false;
                    break 'axes;
                }
            }
        }
    }
    let det = gram.det()?;
    Ok(FrobeniusReport { associative, eigen_orthogonal, nondegenerate: !det.is_zero(), det: format_rational(&det) })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitReport {
    /// `(1 + αd)^{-1} Σx` when `1 + αd ≠ 0`.
    pub unit: Option<Vector>,
    pub lines_per_point: usize,
    /// `⟨Σx⟩` is a submodule of the regular module (always checked).
    pub sum_spans_submodule: bool,
}

/// Unit element of a connected Matsuo algebra, verified on all basis
/// elements.
pub fn unit_element(fs: &FischerSpace, alpha: &Rational) -> Result<UnitReport, AlgebraError> {
    if !fs.is_connected() {
        return Err(AlgebraError::NotConnected);
    }
    let d = constant_lines_per_point(fs.system()).ok_or(AlgebraError::NotConnected)?;
    let aa = matsuo(fs, alpha)?;
    let n = fs.num_points();
    let sum = vec![Rational::one(); n];
    let c = Rational::one() + alpha * int(d as i64);
    let span = Subspace::span(n, &[sum.clone()]);
    for i in 0..n {
        let b = unit_vector(n, i);
        let product = aa.algebra.mul(&sum, &b);
        if product != scale_vector(&c, &b) {
            return Err(AlgebraError::Inconsistent(format!("(sum of points)*{} is not {}", fs.label(i), c)));
        }
    }
    let sum_spans_submodule = (0..n).all(|i| span.contains_vector(&aa.algebra.mul(&sum, &unit_vector(n, i))));
    let unit = if c.is_zero() {
        None
    } else {
        let u = scale_vector(&c.recip(), &sum);
        for i in 0..n {
            let b = unit_vector(n, i);
            if aa.algebra.mul(&u, &b) != b {
                return Err(AlgebraError::Inconsistent("unit candidate fails".into()));
            }
        }
        Some(u)
    };
    Ok(UnitReport { unit, lines_per_point: d, sum_spans_submodule })
}

/// The 3-dimensional Jordan algebra of Clifford type on `{𝟙, u, v}` with
/// `u² = v² = 𝟙`, `uv = 0`, and axes `e₁ = (𝟙+u)/2`, `𝟙−e₁`, `e₂ = (𝟙+v)/2`,
/// `𝟙−e₂` under the Jordan rule with `α = 1/2`.
pub fn clifford_example() -> AxialAlgebra {
    let v = |a: i64, b: i64, c: i64| vec![int(a), int(b), int(c)];
    let products = vec![
        vec![v(1, 0, 0), v(0, 1, 0), v(0, 0, 1)],
        vec![v(0, 1, 0), v(1, 0, 0), v(0, 0, 0)],
        vec![v(0, 0, 1), v(0, 0, 0), v(1, 0, 0)],
    ];
    let algebra = Algebra::new(vec!["1".into(), "u".into(), "v".into()], products).expect("commutative");
    let h = rat(1, 2);
    let axes = vec![
        vec![h.clone(), h.clone(), int(0)],
        vec![h.clone(), -h.clone(), int(0)],
        vec![h.clone(), int(0), h.clone()],
        vec![h.clone(), int(0), -h.clone()],
    ];
    let labels = ["e1", "1-e1", "e2", "1-e2"].map(String::from).to_vec();
    AxialAlgebra::new(algebra, axes, labels, jordan_rule(&h).expect("valid alpha")).expect("dimensions")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::is_zero_vector;
    use crate::geometry::{catalog, pencil, single_line, CatalogName};

    fn fs(name: CatalogName) -> FischerSpace {
        catalog(name, None).unwrap()
    }

    #[test]
    fn jordan_table() {
        let r = jordan_rule(&rat(1, 2)).unwrap();
        let h = rat(1, 2);
        assert_eq!(r.star_values(&int(1), &h).unwrap(), vec![h.clone()]);
        assert_eq!(r.star_values(&h, &h).unwrap(), vec![int(1), int(0)]);
        for a in [rat(1, 2), int(-1), int(2), rat(1, 3)] {
            let r = jordan_rule(&a).unwrap();
            assert!(r.star_values(&int(1), &int(0)).unwrap().is_empty());
        }
        assert!(matches!(jordan_rule(&int(0)), Err(AlgebraError::BadAlpha(_))));
        assert!(matches!(jordan_rule(&int(1)), Err(AlgebraError::BadAlpha(_))));
    }

    #[test]
    fn griess_table() {
        let r = griess_rule();
        assert_eq!(r.star_values(&rat(1, 32), &rat(1, 32)).unwrap(), vec![int(1), int(0), rat(1, 4)]);
        assert_eq!(r.star_values(&rat(1, 4), &rat(1, 4)).unwrap(), vec![int(1), int(0)]);
        assert!(check_grading(&r, &[int(1), int(0), rat(1, 4)], &[rat(1, 32)]).unwrap());
    }

    #[test]
    fn gradings() {
        let r = jordan_rule(&rat(1, 2)).unwrap();
        assert!(check_grading(&r, &[int(1), int(0)], &[rat(1, 2)]).unwrap());
        assert!(!check_grading(&r, &[int(1), rat(1, 2)], &[int(0)]).unwrap());
        assert_eq!(check_grading(&r, &[int(1)], &[rat(1, 2)]), Err(AlgebraError::NotAPartition));
        assert_eq!(check_grading(&r, &[int(1), int(0)], &[int(0), rat(1, 2)]), Err(AlgebraError::NotAPartition));
    }

    #[test]
    fn matsuo_products() {
        let a = rat(1, 3);
        let m = matsuo(&fs(CatalogName::SingleLine), &a).unwrap();
        let half = &a / int(2);
        assert_eq!(m.algebra().product(0, 1), &vec![half.clone(), half.clone(), -half]);
        for i in 0..3 {
            assert_eq!(m.algebra().product(i, i), &unit_vector(3, i));
        }
        let d = fs(CatalogName::DualAffine2);
        let m = matsuo(&d, &rat(1, 2)).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                if x != y && !d.collinear(x, y) {
                    assert!(is_zero_vector(m.algebra().product(x, y)));
                }
            }
        }
    }

    #[test]
    fn eigenspace_examples() {
        let m = matsuo(&fs(CatalogName::SingleLine), &rat(1, 2)).unwrap();
        let a = unit_vector(3, 0);
        assert_eq!(eigenspace(m.algebra(), &a, &int(1)), Subspace::span(3, &[a.clone()]));
        let bc = vec![int(0), int(1), int(-1)];
        assert_eq!(eigenspace(m.algebra(), &a, &rat(1, 2)), Subspace::span(3, &[bc]));
        assert!(eigenspace(m.algebra(), &a, &int(7)).is_zero());
    }

    #[test]
    fn eigenbasis_dims() {
        let h = rat(1, 2);
        let f = fs(CatalogName::Affine3);
        for x in f.geometry().points() {
            assert_eq!(matsuo_eigenbasis(&f, &h, x).unwrap().dims(), (1, 4, 4));
        }
        let f = fs(CatalogName::DualAffine2);
        for x in f.geometry().points() {
            assert_eq!(matsuo_eigenbasis(&f, &h, x).unwrap().dims(), (1, 3, 2));
        }
        let f = fs(CatalogName::SingleLine);
        assert_eq!(matsuo_eigenbasis(&f, &h, "a").unwrap().dims(), (1, 1, 1));
    }

    #[test]
    fn matsuo_is_axial() {
        for name in [CatalogName::DualAffine2, CatalogName::Affine3, CatalogName::SingleLine] {
            for a in [rat(1, 2), int(-1), int(2), rat(1, 3)] {
                let m = matsuo(&fs(name), &a).unwrap();
                assert!(check_axial(&m).ok, "{name:?} {a}");
            }
        }
    }

    #[test]
    fn pencil_fails_fusion() {
        let ts = TripleSystem::new(pencil()).unwrap();
        let m = matsuo_system(&ts, &rat(1, 2)).unwrap();
        let a = ts.geometry().point_index("a").unwrap();
        let r = check_axis(m.algebra(), &unit_vector(5, a), m.rule());
        assert!(matches!(r.witness, Some(AxisViolation::Fusion { .. })));
        assert!(!check_axial(&m).ok);
    }

    #[test]
    fn pencil_witness_product() {
        // u = b+c-αa and v = d+e-αa lie in the 0-eigenspace of a, but u·v = -α²a
        let ts = TripleSystem::new(pencil()).unwrap();
        let alpha = rat(1, 2);
        let m = matsuo_system(&ts, &alpha).unwrap();
        let idx = |s: &str| ts.geometry().point_index(s).unwrap();
        let mut u = zero_vector(5);
        u[idx("b")] = int(1);
        u[idx("c")] = int(1);
        u[idx("a")] = -alpha.clone();
        let mut v = zero_vector(5);
        v[idx("d")] = int(1);
        v[idx("e")] = int(1);
        v[idx("a")] = -alpha.clone();
        let ea = unit_vector(5, idx("a"));
        let zero = eigenspace(m.algebra(), &ea, &int(0));
        assert!(zero.contains_vector(&u) && zero.contains_vector(&v));
        let mut expected = zero_vector(5);
        expected[idx("a")] = -(&alpha * &alpha);
        assert_eq!(m.algebra().mul(&u, &v), expected);
        assert!(!zero.contains_vector(&expected));
    }

    #[test]
    fn single_axis_does_not_generate() {
        let m = matsuo(&fs(CatalogName::Affine3), &rat(1, 2)).unwrap().with_axes(&[0]);
        assert!(matches!(check_axial(&m).witness, Some(AxialViolation::Generation { generated_dim: 1, dim: 9 })));
    }

    #[test]
    fn miyamoto_on_single_line() {
        let m = matsuo(&fs(CatalogName::SingleLine), &rat(1, 2)).unwrap();
        let t = miyamoto_matrix(&m, &unit_vector(3, 0)).unwrap();
        assert_eq!(t, Matrix::from_ints(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]));
    }

    #[test]
    fn miyamoto_identity_without_minus_part() {
        let single = FischerSpace::new(crate::geometry::single_point()).unwrap();
        let m = matsuo(&single, &rat(1, 2)).unwrap();
        assert!(miyamoto_matrix(&m, &unit_vector(1, 0)).unwrap().is_identity());
    }

    #[test]
    fn miyamoto_needs_grading() {
        let m = matsuo(&fs(CatalogName::SingleLine), &rat(1, 2)).unwrap();
        let ungraded = FusionRule::new(
            m.rule().eigenvalues().to_vec(),
            &[(int(1), int(1), vec![int(1)]), (rat(1, 2), rat(1, 2), vec![int(1), int(0), rat(1, 2)])],
            None,
        )
        .unwrap();
        let aa = AxialAlgebra::new(m.algebra().clone(), m.axes().to_vec(), m.axis_labels().to_vec(), ungraded).unwrap();
        assert_eq!(miyamoto_matrix(&aa, &unit_vector(3, 0)), Err(AlgebraError::NoGrading));
    }

    #[test]
    fn conjugation_of_miyamoto_maps() {
        let m = matsuo(&fs(CatalogName::DualAffine2), &int(2)).unwrap();
        let taus: Vec<Matrix> = m.axes().iter().map(|e| miyamoto_matrix(&m, e).unwrap()).collect();
        for (x, ex) in m.axes().iter().enumerate() {
            for ty in &taus {
                let image = ty.apply(ex);
                let z = m.axis_index(&image).unwrap();
                assert_eq!(ty.mul(&taus[x]).mul(ty), taus[z]);
            }
        }
    }

    #[test]
    fn closure_restores_missing_point() {
        let m = matsuo(&fs(CatalogName::Affine3), &rat(1, 2)).unwrap();
        assert!(miyamoto_closed(&m).unwrap().ok);
        let truncated = m.with_axes(&(0..8).collect::<Vec<_>>());
        let r = miyamoto_closed(&truncated).unwrap();
        assert!(!r.ok);
        assert_eq!(r.closure.len(), 9);
        assert!(r.closure.contains(&unit_vector(9, 8)));
    }

    #[test]
    fn clifford() {
        let c = clifford_example();
        let e1 = &c.axes()[0];
        assert_eq!(&c.algebra().mul(e1, e1), e1);
        assert!(check_axial(&c).ok);
        let t1 = miyamoto_matrix(&c, &c.axes()[0]).unwrap();
        let t1c = miyamoto_matrix(&c, &c.axes()[1]).unwrap();
        assert_eq!(t1, t1c);
        // τ_{e₁} fixes 𝟙 and u and negates v
        assert_eq!(t1, Matrix::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -1]]));
        assert_eq!(t1.apply(&c.axes()[2]), c.axes()[3]);
        let pair = c.with_axes(&[0, 2]);
        assert!(!miyamoto_closed(&pair).unwrap().ok);
        assert!(miyamoto_closed(&c).unwrap().ok);
    }

    #[test]
    fn gram_examples() {
        let h = rat(1, 2);
        let q = rat(1, 4);
        let ts = TripleSystem::new(single_line()).unwrap();
        let g = frobenius_gram(&ts, &h);
        let expected = Matrix::from_rows(
            3,
            vec![
                vec![int(1), q.clone(), q.clone()],
                vec![q.clone(), int(1), q.clone()],
                vec![q.clone(), q.clone(), int(1)],
            ],
        )
        .unwrap();
        assert_eq!(g, expected);
        let f = fs(CatalogName::Affine3);
        let g = frobenius_gram(f.system(), &h);
        for i in 0..9 {
            for j in 0..9 {
                assert_eq!(g.get(i, j), &if i == j { int(1) } else { q.clone() });
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        let f = fs(CatalogName::SingleLine);
        let m = matsuo(&f, &rat(1, 2)).unwrap();
        let r = frobenius_check(&m, &frobenius_gram(f.system(), &rat(1, 2))).unwrap();
        assert!(r.associative && r.eigen_orthogonal && r.nondegenerate);
        assert_eq!(r.det, "27/32");
        let m1 = matsuo(&f, &int(-1)).unwrap();
        let r = frobenius_check(&m1, &frobenius_gram(f.system(), &int(-1))).unwrap();
        assert!(r.associative && !r.nondegenerate);
        let r = frobenius_check(&m, &Matrix::identity(3)).unwrap();
        assert!(!r.associative);
        assert!(matches!(frobenius_check(&m, &Matrix::identity(2)), Err(AlgebraError::DimensionMismatch { .. })));
    }

    #[test]
    fn units() {
        let f = fs(CatalogName::SingleLine);
        let r = unit_element(&f, &rat(1, 2)).unwrap();
        assert_eq!(r.unit, Some(vec![rat(2, 3); 3]));
        let r = unit_element(&f, &int(-1)).unwrap();
        assert_eq!(r.unit, None);
        assert!(r.sum_spans_submodule);
        let r = unit_element(&fs(CatalogName::Affine3), &rat(1, 2)).unwrap();
        assert_eq!(r.lines_per_point, 4);
        assert_eq!(r.unit, Some(vec![rat(1, 3); 9]));
        let two = FischerSpace::new(crate::geometry::two_disjoint_lines()).unwrap();
        assert_eq!(unit_element(&two, &rat(1, 2)).unwrap_err(), AlgebraError::NotConnected);
    }
}
