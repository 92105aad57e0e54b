//! Concrete algebras: `gl`/`sl(n+1|n)` and `osp(2m±1|2m)` with Chevalley
//! bases in block and diagonal format, closed-form Cartan matrices and
//! inverses, supermetrics, membership predicates and basis transformations.
//!
//! Conventions. In diagonal format the Chevalley generators sit on the first
//! upper and lower diagonals:
//!
//! * `sl(n+1|n)`: `h_i = (-1)^{i+1}(E_ii + E_{i+1,i+1})`,
//!   `e_i = (-1)^{i+1} E_{i,i+1}`, `f_i = E_{i+1,i}`;
//! * `osp(2m±1|2m)`: the centered expressions of [`chevalley_basis`], chosen
//!   so the principal `osp(1|2)` embedding takes the same closed form as for
//!   `sl(n+1|n)`.
//!
//! Block-format Chevalley matrices are built-in for the orthosymplectic
//! families. For `gl`/`sl` in block format there is no distinguished
//! normalization, so the plain first-upper-diagonal convention
//! `e_i = E_{i,i+1}`, `f_i = E_{i+1,i}`, `h_i = [e_i, f_i}` is used; note
//! those generators are not all odd (the block format does not alternate).
//!
//! The bilinear form used for Cartan matrices is the defining-representation
//! supertrace form `<M, N> = str(MN)`, under which
//! `a_ij = <h_i, h_j> / <e_j, f_j>` reproduces the closed-form Cartan
//! matrices exactly.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::{Format, GradedMatrix};
use crate::linsolve;
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::report::{Check, VerificationReport};

/// Algebra family.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Gl,
    Sl,
    OspMinus,
    OspPlus,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Gl => "gl",
            Family::Sl => "sl",
            Family::OspMinus => "osp_minus",
            Family::OspPlus => "osp_plus",
        }
    }
}

/// Which matrix format an algebra is realized in.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormatKind {
    /// All even basis vectors first, then all odd ones.
    Block,
    /// Strictly alternating parities.
    Diagonal,
}

/// An algebra together with the matrix format it is realized in.
///
/// The parameter is `n` for `gl`/`sl(n+1|n)` (size `2n+1`) and `m` for
/// `osp(2m-1|2m)` (size `4m-1`) or `osp(2m+1|2m)` (size `4m+1`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AlgebraId {
    family: Family,
    parameter: usize,
    kind: FormatKind,
}

impl AlgebraId {
    pub fn new(family: Family, parameter: usize, kind: FormatKind) -> Result<Self> {
        if parameter < 1 {
            return Err(Error::Unsupported("algebra parameter must be >= 1".into()));
        }
        Ok(AlgebraId {
            family,
            parameter,
            kind,
        })
    }

    pub fn gl(n: usize, kind: FormatKind) -> Result<Self> {
        Self::new(Family::Gl, n, kind)
    }

    pub fn sl(n: usize, kind: FormatKind) -> Result<Self> {
        Self::new(Family::Sl, n, kind)
    }

    pub fn osp_minus(m: usize, kind: FormatKind) -> Result<Self> {
        Self::new(Family::OspMinus, m, kind)
    }

    pub fn osp_plus(m: usize, kind: FormatKind) -> Result<Self> {
        Self::new(Family::OspPlus, m, kind)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn parameter(&self) -> usize {
        self.parameter
    }

    pub fn format_kind(&self) -> FormatKind {
        self.kind
    }

    /// Matrix size: `2n+1` for `gl`/`sl`, `4m∓1` for `osp(2m∓1|2m)`.
    pub fn size(&self) -> usize {
        match self.family {
            Family::Gl | Family::Sl => 2 * self.parameter + 1,
            Family::OspMinus => 4 * self.parameter - 1,
            Family::OspPlus => 4 * self.parameter + 1,
        }
    }

    /// Number of Chevalley triples: `2n`, `2m-1` or `2m`.
    pub fn rank(&self) -> usize {
        match self.family {
            Family::Gl | Family::Sl => 2 * self.parameter,
            Family::OspMinus => 2 * self.parameter - 1,
            Family::OspPlus => 2 * self.parameter,
        }
    }

    /// Even and odd dimensions `(n_even, n_odd)` of the underlying space.
    pub fn block_dimensions(&self) -> (usize, usize) {
        match self.family {
            Family::Gl | Family::Sl => (self.parameter + 1, self.parameter),
            Family::OspMinus => (2 * self.parameter - 1, 2 * self.parameter),
            Family::OspPlus => (2 * self.parameter + 1, 2 * self.parameter),
        }
    }

    /// The format this algebra id refers to.
    pub fn format(&self) -> Format {
        let (n_even, n_odd) = self.block_dimensions();
        match self.kind {
            FormatKind::Block => Format::block(n_even, n_odd),
            FormatKind::Diagonal => {
                let first = if n_even >= n_odd { 1 } else { -1 };
                Format::alternating(n_even + n_odd, first).expect("valid size")
            }
        }
    }

    fn wrap(&self, m: Matrix) -> GradedMatrix {
        GradedMatrix::new(m, self.format()).expect("size matches")
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n_even, n_odd) = self.block_dimensions();
        let name = match self.family {
            Family::Gl => "gl",
            Family::Sl => "sl",
            Family::OspMinus | Family::OspPlus => "osp",
        };
        let kind = match self.kind {
            FormatKind::Block => "block",
            FormatKind::Diagonal => "diagonal",
        };
        write!(f, "{name}({n_even}|{n_odd}) {kind}")
    }
}

#[derive(Serialize, Deserialize)]
struct AlgebraIdRepr {
    family: Family,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    format: FormatKind,
}

impl Serialize for AlgebraId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (n, m) = match self.family {
            Family::Gl | Family::Sl => (Some(self.parameter), None),
            Family::OspMinus | Family::OspPlus => (None, Some(self.parameter)),
        };
        AlgebraIdRepr {
            family: self.family,
            n,
            m,
            format: self.kind,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = AlgebraIdRepr::deserialize(d)?;
        let parameter = match (repr.family, repr.n, repr.m) {
            (Family::Gl | Family::Sl, Some(n), None) => n,
            (Family::OspMinus | Family::OspPlus, None, Some(m)) => m,
            _ => {
                return Err(serde::de::Error::custom(
                    "expected \"n\" for gl/sl or \"m\" for osp families",
                ))
            }
        };
        AlgebraId::new(repr.family, parameter, repr.format).map_err(serde::de::Error::custom)
    }
}

/// Indexed Chevalley triples `(h_i, e_i, f_i)` of an algebra.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ChevalleyBasis {
    pub algebra: AlgebraId,
    pub h: Vec<GradedMatrix>,
    pub e: Vec<GradedMatrix>,
    pub f: Vec<GradedMatrix>,
}

impl ChevalleyBasis {
    pub fn rank(&self) -> usize {
        self.h.len()
    }

    /// Checks structural consistency: generator list lengths equal the
    /// algebra rank and every generator carries the algebra's format.
    pub fn validate(&self) -> Result<()> {
        let rank = self.algebra.rank();
        if self.h.len() != rank || self.e.len() != rank || self.f.len() != rank {
            return Err(Error::WrongEntryCount {
                expected: rank,
                actual: self.h.len().min(self.e.len()).min(self.f.len()),
            });
        }
        let fmt = self.algebra.format();
        for g in self.h.iter().chain(&self.e).chain(&self.f) {
            if *g.format() != fmt {
                return Err(Error::FormatMismatch);
            }
        }
        Ok(())
    }
}

/// A Cartan matrix together with its exact inverse.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CartanData {
    pub a: Matrix,
    pub a_inv: Matrix,
}

impl CartanData {
    /// Closed-form Cartan matrix and inverse for the family at this rank;
    /// the product is verified to be the identity.
    pub fn closed_form(family: Family, rank: usize) -> Result<Self> {
        let a = cartan_matrix(family, rank)?;
        let a_inv = inverse_cartan(family, rank)?;
        assert_eq!(
            &a * &a_inv,
            Matrix::identity(rank),
            "closed-form inverse failed for {} rank {rank}",
            family.as_str()
        );
        Ok(CartanData { a, a_inv })
    }
}

fn check_rank(family: Family, rank: usize) -> Result<()> {
    let ok = match family {
        Family::Gl | Family::Sl | Family::OspPlus => rank >= 2 && rank.is_multiple_of(2),
        Family::OspMinus => rank % 2 == 1,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InconsistentRank {
            family: family.as_str().into(),
            rank,
        })
    }
}

/// Closed-form Cartan matrix in the all-odd simple root convention.
///
/// For `gl`/`sl` the two first off-diagonals carry `1, -1, 1, -1, ...`;
/// for `osp(2m∓1|2m)`, `a_11 = 1` and `a_{i,i+1} = a_{i+1,i} = (-1)^i`.
pub fn cartan_matrix(family: Family, rank: usize) -> Result<Matrix> {
    check_rank(family, rank)?;
    let m = match family {
        Family::Gl | Family::Sl => Matrix::from_fn(rank, |i, j| {
            if i.abs_diff(j) == 1 {
                let t = i.min(j);
                Rational::from(if t % 2 == 1 { 1 } else { -1 })
            } else {
                Rational::zero()
            }
        }),
        Family::OspMinus | Family::OspPlus => Matrix::from_fn(rank, |i, j| {
            if i == 1 && j == 1 {
                Rational::one()
            } else if i.abs_diff(j) == 1 {
                let t = i.min(j);
                Rational::from(if t % 2 == 0 { 1 } else { -1 })
            } else {
                Rational::zero()
            }
        }),
    };
    Ok(m)
}

/// Closed-form inverse of [`cartan_matrix`].
pub fn inverse_cartan(family: Family, rank: usize) -> Result<Matrix> {
    check_rank(family, rank)?;
    let m = match family {
        // Bands k = ±1, ±3, ... with entries 1, 0, 1, 0, ...
        Family::Gl | Family::Sl => Matrix::from_fn(rank, |i, j| {
            if i.abs_diff(j) % 2 == 1 && i.min(j) % 2 == 1 {
                Rational::one()
            } else {
                Rational::zero()
            }
        }),
        // Even bands with entries 1, 0, ... plus odd bands with 0, 1, ...
        Family::OspMinus => Matrix::from_fn(rank, |i, j| {
            let diff_even = i.abs_diff(j) % 2 == 0;
            let min_odd = i.min(j) % 2 == 1;
            if diff_even == min_odd {
                Rational::one()
            } else {
                Rational::zero()
            }
        }),
        // Even bands with entries 0, -1, ... plus odd bands with -1, 0, ...
        Family::OspPlus => Matrix::from_fn(rank, |i, j| {
            let diff_even = i.abs_diff(j) % 2 == 0;
            let min_even = i.min(j) % 2 == 0;
            if diff_even == min_even {
                Rational::from(-1)
            } else {
                Rational::zero()
            }
        }),
    };
    Ok(m)
}

fn sign_of(neg: bool) -> Rational {
    if neg {
        Rational::from(-1)
    } else {
        Rational::one()
    }
}

/// The built-in Chevalley basis of an algebra in its stated format.
///
/// Diagonal bases have all generators odd, `e_i` on the first upper and
/// `f_i` on the first lower diagonal.
pub fn chevalley_basis(alg: &AlgebraId) -> Result<ChevalleyBasis> {
    let p = alg.size();
    let rank = alg.rank();
    let unit = |i: usize, j: usize| Matrix::unit_entry(i, j, p);
    let (mut hs, mut es, mut fs) = (
        Vec::with_capacity(rank),
        Vec::with_capacity(rank),
        Vec::with_capacity(rank),
    );
    match (alg.family, alg.kind) {
        (Family::Gl | Family::Sl, FormatKind::Diagonal) => {
            for i in 1..=rank {
                let s = sign_of(i % 2 == 0); // (-1)^{i+1}
                hs.push((&unit(i, i)? + &unit(i + 1, i + 1)?).scale(&s));
                es.push(unit(i, i + 1)?.scale(&s));
                fs.push(unit(i + 1, i)?);
            }
        }
        (Family::Gl | Family::Sl, FormatKind::Block) => {
            // First-upper-diagonal convention; h_i closes the triple via the
            // graded bracket. These generators are of mixed parity.
            for i in 1..=rank {
                let e = alg.wrap(unit(i, i + 1)?);
                let f = alg.wrap(unit(i + 1, i)?);
                hs.push(e.graded_commutator(&f).matrix().clone());
                es.push(unit(i, i + 1)?);
                fs.push(unit(i + 1, i)?);
            }
        }
        (Family::OspMinus, FormatKind::Diagonal) => {
            let m = alg.parameter;
            for i in 1..=rank {
                let s = sign_of(i % 2 == 0); // (-1)^{i+1}
                let h = &(&unit(2 * m - i, 2 * m - i)? - &unit(2 * m + i, 2 * m + i)?)
                    + &(&unit(2 * m + 1 - i, 2 * m + 1 - i)?
                        - &unit(2 * m - 1 + i, 2 * m - 1 + i)?);
                hs.push(h.scale(&s));
                let e = &unit(2 * m - 1 + i, 2 * m + i)? - &unit(2 * m - i, 2 * m + 1 - i)?;
                es.push(e.scale(&sign_of(i % 2 == 1))); // (-1)^i
                fs.push(&unit(2 * m + i, 2 * m - 1 + i)? + &unit(2 * m + 1 - i, 2 * m - i)?);
            }
        }
        (Family::OspPlus, FormatKind::Diagonal) => {
            let m = alg.parameter;
            for i in 1..=rank {
                let s = sign_of(i % 2 == 0); // (-1)^{i+1}
                let h = &(&unit(2 * m + 1 - i, 2 * m + 1 - i)?
                    - &unit(2 * m + 1 + i, 2 * m + 1 + i)?)
                    + &(&unit(2 * m + 2 - i, 2 * m + 2 - i)? - &unit(2 * m + i, 2 * m + i)?);
                hs.push(h.scale(&s));
                let e = &unit(2 * m + i, 2 * m + 1 + i)? - &unit(2 * m + 1 - i, 2 * m + 2 - i)?;
                es.push(e.scale(&sign_of(i % 2 == 1))); // (-1)^i
                fs.push(&unit(2 * m + 1 + i, 2 * m + i)? + &unit(2 * m + 2 - i, 2 * m + 1 - i)?);
            }
        }
        (Family::OspMinus, FormatKind::Block) => {
            let m = alg.parameter;
            hs.resize(rank, Matrix::zero(p));
            es.resize(rank, Matrix::zero(p));
            fs.resize(rank, Matrix::zero(p));
            for i in 1..=m {
                es[2 * i - 2] = &unit(m + 1 - i, 4 * m - i)? + &unit(3 * m - i, m - 1 + i)?;
                fs[2 * i - 2] = &unit(m - 1 + i, 3 * m - i)? - &unit(4 * m - i, m + 1 - i)?;
                hs[2 * i - 2] = &(&unit(3 * m - i, 3 * m - i)? - &unit(4 * m - i, 4 * m - i)?)
                    + &(&unit(m - 1 + i, m - 1 + i)? - &unit(m + 1 - i, m + 1 - i)?);
            }
            for i in 1..m {
                es[2 * i - 1] = &unit(m + i, 3 * m - i)? - &unit(4 * m - i, m - i)?;
                fs[2 * i - 1] = -&(&unit(m - i, 4 * m - i)? + &unit(3 * m - i, m + i)?);
                hs[2 * i - 1] = &(&unit(m - i, m - i)? - &unit(m + i, m + i)?)
                    + &(&unit(4 * m - i, 4 * m - i)? - &unit(3 * m - i, 3 * m - i)?);
            }
        }
        (Family::OspPlus, FormatKind::Block) => {
            let m = alg.parameter;
            hs.resize(rank, Matrix::zero(p));
            es.resize(rank, Matrix::zero(p));
            fs.resize(rank, Matrix::zero(p));
            for i in 1..=m {
                es[2 * i - 2] = &unit(m + 2 - i, 4 * m + 2 - i)? + &unit(3 * m + 2 - i, m + i)?;
                es[2 * i - 1] = &unit(m + 1 + i, 3 * m + 2 - i)? - &unit(4 * m + 2 - i, m + 1 - i)?;
                fs[2 * i - 2] = &unit(m + i, 3 * m + 2 - i)? - &unit(4 * m + 2 - i, m + 2 - i)?;
                fs[2 * i - 1] =
                    -&(&unit(m + 1 - i, 4 * m + 2 - i)? + &unit(3 * m + 2 - i, m + 1 + i)?);
                hs[2 * i - 2] = &(&unit(3 * m + 2 - i, 3 * m + 2 - i)?
                    - &unit(4 * m + 2 - i, 4 * m + 2 - i)?)
                    + &(&unit(m + i, m + i)? - &unit(m + 2 - i, m + 2 - i)?);
                hs[2 * i - 1] = &(&unit(m + 1 - i, m + 1 - i)? - &unit(m + 1 + i, m + 1 + i)?)
                    + &(&unit(4 * m + 2 - i, 4 * m + 2 - i)?
                        - &unit(3 * m + 2 - i, 3 * m + 2 - i)?);
            }
        }
    }
    Ok(ChevalleyBasis {
        algebra: *alg,
        h: hs.into_iter().map(|m| alg.wrap(m)).collect(),
        e: es.into_iter().map(|m| alg.wrap(m)).collect(),
        f: fs.into_iter().map(|m| alg.wrap(m)).collect(),
    })
}

/// The supertrace form `<M, N> = str(MN)`.
pub fn trace_form(a: &GradedMatrix, b: &GradedMatrix) -> Rational {
    a.product(b).supertrace()
}

/// Cartan matrix recomputed from generator triples via the supertrace form:
/// `a_ij = <h_i, h_j> / <e_j, f_j>`, after checking `<e_i, f_j> = 0` for
/// `i != j`.
pub fn cartan_from_generators(
    h: &[GradedMatrix],
    e: &[GradedMatrix],
    f: &[GradedMatrix],
) -> Result<Matrix> {
    let rank = h.len();
    assert!(
        rank == e.len() && rank == f.len(),
        "generator lists must have equal length"
    );
    let mut pairings = Vec::with_capacity(rank);
    for (j, fj) in f.iter().enumerate() {
        for (i, ei) in e.iter().enumerate() {
            let p = trace_form(ei, fj);
            if i == j {
                if p.is_zero() {
                    return Err(Error::DegeneratePairing { index: j + 1 });
                }
                pairings.push(p);
            } else if !p.is_zero() {
                return Err(Error::NonOrthogonalPairing { i: i + 1, j: j + 1 });
            }
        }
    }
    Ok(Matrix::from_fn(rank, |i, j| {
        &trace_form(&h[i - 1], &h[j - 1]) / &pairings[j - 1]
    }))
}

/// [`cartan_from_generators`] applied to a basis.
pub fn cartan_from_basis(basis: &ChevalleyBasis) -> Result<Matrix> {
    cartan_from_generators(&basis.h, &basis.e, &basis.f)
}

/// Checks all four Chevalley relation families against the given Cartan
/// matrix, exactly:
///
/// `[h_i, h_j} = 0`, `[h_i, e_j} = a_ij e_j`, `[h_i, f_j} = -a_ij f_j`,
/// `[e_i, f_j} = δ_ij h_j`.
///
/// Failures are recorded in the report together with the residual matrix.
pub fn verify_chevalley(basis: &ChevalleyBasis, a: &Matrix) -> VerificationReport {
    verify_chevalley_generators(&basis.h, &basis.e, &basis.f, a)
}

/// [`verify_chevalley`] on bare generator triples, for bases that do not
/// come from a built-in algebra id (windowed truncations, rescalings of
/// ad-hoc generator sets).
pub fn verify_chevalley_generators(
    h: &[GradedMatrix],
    e: &[GradedMatrix],
    f: &[GradedMatrix],
    a: &Matrix,
) -> VerificationReport {
    let basis = GeneratorsView { h, e, f };
    let rank = h.len();
    assert!(
        rank == e.len() && rank == f.len(),
        "generator lists must have equal length"
    );
    assert_eq!(a.size(), rank, "Cartan matrix size must equal the rank");
    let mut report = VerificationReport::new();
    let zero = Matrix::zero(h.first().map_or(1, |g| g.size()));
    for i in 0..rank {
        for j in 0..rank {
            let hh = basis.h[i].graded_commutator(&basis.h[j]);
            report.push(Check::equality(
                format!("[h_{}, h_{}}} = 0", i + 1, j + 1),
                hh.matrix(),
                &zero,
            ));

            let he = basis.h[i].graded_commutator(&basis.e[j]);
            let aij_e = basis.e[j].matrix().scale(a.get(i + 1, j + 1));
            report.push(Check::equality(
                format!(
                    "[h_{}, e_{}}} = a_{}{} e_{}",
                    i + 1,
                    j + 1,
                    i + 1,
                    j + 1,
                    j + 1
                ),
                he.matrix(),
                &aij_e,
            ));

            let hf = basis.h[i].graded_commutator(&basis.f[j]);
            let aij_f = basis.f[j].matrix().scale(&-a.get(i + 1, j + 1));
            report.push(Check::equality(
                format!(
                    "[h_{}, f_{}}} = -a_{}{} f_{}",
                    i + 1,
                    j + 1,
                    i + 1,
                    j + 1,
                    j + 1
                ),
                hf.matrix(),
                &aij_f,
            ));

            let ef = basis.e[i].graded_commutator(&basis.f[j]);
            let expect = if i == j {
                basis.h[j].matrix().clone()
            } else {
                zero.clone()
            };
            report.push(Check::equality(
                format!(
                    "[e_{}, f_{}}} = {}",
                    i + 1,
                    j + 1,
                    if i == j {
                        format!("h_{}", j + 1)
                    } else {
                        "0".into()
                    }
                ),
                ef.matrix(),
                &expect,
            ));
        }
    }
    report
}

struct GeneratorsView<'a> {
    h: &'a [GradedMatrix],
    e: &'a [GradedMatrix],
    f: &'a [GradedMatrix],
}

/// The supermetric of an orthosymplectic algebra.
///
/// Block format: the direct sum of the antidiagonal symmetric form on the
/// even block and the standard antisymmetric form `[[0, -1_m], [1_m, 0]]` on
/// the odd block. Diagonal format: a signed antidiagonal. Errors for
/// non-orthosymplectic families.
pub fn supermetric(alg: &AlgebraId) -> Result<Matrix> {
    let p = alg.size();
    let m = alg.parameter;
    match (alg.family, alg.kind) {
        (Family::OspMinus | Family::OspPlus, FormatKind::Block) => {
            let so_dim = match alg.family {
                Family::OspMinus => 2 * m - 1,
                _ => 2 * m + 1,
            };
            let mut acc = Matrix::zero(p);
            for i in 1..=so_dim {
                acc = &acc + &Matrix::unit_entry(i, so_dim + 1 - i, p)?;
            }
            for i in 1..=m {
                acc = &acc - &Matrix::unit_entry(so_dim + i, so_dim + m + i, p)?;
                acc = &acc + &Matrix::unit_entry(so_dim + m + i, so_dim + i, p)?;
            }
            Ok(acc)
        }
        (Family::OspMinus, FormatKind::Diagonal) => {
            // (-1)^m sum_i (-1)^{[(i+1)/2]} E_{i, 4m-i}.
            let overall = sign_of(m % 2 == 1);
            let mut acc = Matrix::zero(p);
            for i in 1..=p {
                let s = sign_of(i.div_ceil(2) % 2 == 1);
                acc = &acc + &Matrix::unit_entry(i, 4 * m - i, p)?.scale(&(&s * &overall));
            }
            Ok(acc)
        }
        (Family::OspPlus, FormatKind::Diagonal) => {
            // (-1)^m sum_i (-1)^{[i/2]} E_{i, 4m+2-i}.
            let overall = sign_of(m % 2 == 1);
            let mut acc = Matrix::zero(p);
            for i in 1..=p {
                let s = sign_of((i / 2) % 2 == 1);
                acc = &acc + &Matrix::unit_entry(i, 4 * m + 2 - i, p)?.scale(&(&s * &overall));
            }
            Ok(acc)
        }
        _ => Err(Error::Unsupported(format!(
            "supermetric is defined for osp families only, got {}",
            alg.family.as_str()
        ))),
    }
}

fn check_element(alg: &AlgebraId, m: &GradedMatrix) -> Result<()> {
    if m.size() != alg.size() {
        return Err(Error::SizeMismatch {
            left: m.size(),
            right: alg.size(),
        });
    }
    if *m.format() != alg.format() {
        return Err(Error::FormatMismatch);
    }
    Ok(())
}

/// The metric membership condition `M^sT G + G M = 0` for osp algebras.
pub fn osp_metric_condition(alg: &AlgebraId, m: &GradedMatrix) -> Result<bool> {
    check_element(alg, m)?;
    let g = supermetric(alg)?;
    let lhs = &(m.supertranspose().matrix() * &g) + &(&g * m.matrix());
    Ok(lhs.is_zero())
}

/// The entrywise symmetry condition characterizing diagonal-format osp
/// elements: `M_ij = (-1)^{floor((j-i)/2)+1} M_{p+1-j, p+1-i}`, i.e. the
/// diagonals are alternately antisymmetric and symmetric about the
/// antidiagonal, in pairs, separately for even and odd diagonals.
pub fn osp_symmetry_condition(alg: &AlgebraId, m: &GradedMatrix) -> Result<bool> {
    if !matches!(alg.family, Family::OspMinus | Family::OspPlus)
        || alg.kind != FormatKind::Diagonal
    {
        return Err(Error::Unsupported(
            "the diagonal symmetry condition applies to diagonal-format osp algebras".into(),
        ));
    }
    check_element(alg, m)?;
    let p = alg.size();
    for i in 1..=p {
        for j in 1..=p {
            let d = j as i64 - i as i64;
            let sign = sign_of((d.div_euclid(2) + 1).rem_euclid(2) == 1);
            let expect = m.matrix().get(p + 1 - j, p + 1 - i) * &sign;
            if *m.matrix().get(i, j) != expect {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Membership predicate.
///
/// `gl`: every graded matrix of the right size and format. `sl`: vanishing
/// supertrace. `osp`: the metric condition `M^sT G + G M = 0`; in diagonal
/// format the independent entrywise symmetry condition is evaluated as well
/// and any disagreement with the metric condition is an internal consistency
/// failure (debug assertion), never silently resolved.
pub fn is_member(alg: &AlgebraId, m: &GradedMatrix) -> Result<bool> {
    check_element(alg, m)?;
    match alg.family {
        Family::Gl => Ok(true),
        Family::Sl => Ok(m.supertrace().is_zero()),
        Family::OspMinus | Family::OspPlus => {
            let metric = osp_metric_condition(alg, m)?;
            if alg.kind == FormatKind::Diagonal {
                let symmetry = osp_symmetry_condition(alg, m)?;
                debug_assert_eq!(
                    metric, symmetry,
                    "internal consistency failure: metric and symmetry \
                     membership conditions disagree for {alg}"
                );
            }
            Ok(metric)
        }
    }
}

/// Dimensions `(even, odd)` of the osp membership solution space, computed
/// as nullspace dimensions of the metric condition restricted to entries of
/// each parity.
pub fn membership_dimensions(alg: &AlgebraId) -> Result<(usize, usize)> {
    if !matches!(alg.family, Family::OspMinus | Family::OspPlus) {
        return Err(Error::Unsupported(
            "membership dimensions are computed for osp families".into(),
        ));
    }
    let g = supermetric(alg)?;
    let fmt = alg.format();
    let p = alg.size();
    let mut dims = [0usize, 0usize];
    for degree in 0..2u8 {
        let slots: Vec<(usize, usize)> = (1..=p)
            .flat_map(|i| (1..=p).map(move |j| (i, j)))
            .filter(|&(i, j)| fmt.entry_parity(i, j) == degree)
            .collect();
        // Column c holds the flattened condition matrix of the c-th slot.
        let mut rows = vec![vec![Rational::zero(); slots.len()]; p * p];
        for (c, &(i, j)) in slots.iter().enumerate() {
            let e = GradedMatrix::new(Matrix::unit_entry(i, j, p)?, fmt.clone())?;
            let cond = &(e.supertranspose().matrix() * &g) + &(&g * e.matrix());
            for r in 1..=p {
                for s in 1..=p {
                    rows[(r - 1) * p + (s - 1)][c] = cond.get(r, s).clone();
                }
            }
        }
        dims[degree as usize] = slots.len() - linsolve::rank(&rows, slots.len());
    }
    Ok((dims[0], dims[1]))
}

/// The graded Chevalley involution `σ(h_i) = -h_i`, `σ(e_i) = -f_i`,
/// `σ(f_i) = e_i` (so `σ^4 = id`).
///
/// For all-odd bases the image satisfies the same relations with the same
/// Cartan matrix.
pub fn chevalley_involution(basis: &ChevalleyBasis) -> ChevalleyBasis {
    ChevalleyBasis {
        algebra: basis.algebra,
        h: basis.h.iter().map(|h| -h).collect(),
        e: basis.f.iter().map(|f| -f).collect(),
        f: basis.e.clone(),
    }
}

/// Rescales a basis: `e_i' = α_i e_i`, `f_i' = β_i f_i`,
/// `h_i' = α_i β_i h_i`. All coefficients must be nonzero and the lists must
/// match the rank.
///
/// With `α_i β_i = <e_i, f_i>^{-1}` the recomputed Cartan matrix becomes
/// symmetric and equals `<h_i', h_j'>`; with `(α_i, β_i) = (q, 1/q)` the
/// relations are untouched.
pub fn rescale_basis(
    basis: &ChevalleyBasis,
    alpha: &[Rational],
    beta: &[Rational],
) -> Result<ChevalleyBasis> {
    let rank = basis.rank();
    if alpha.len() != rank || beta.len() != rank {
        return Err(Error::WrongEntryCount {
            expected: rank,
            actual: alpha.len().min(beta.len()),
        });
    }
    for (idx, c) in alpha.iter().chain(beta.iter()).enumerate() {
        if c.is_zero() {
            return Err(Error::ZeroCoefficient {
                index: idx % rank + 1,
            });
        }
    }
    Ok(ChevalleyBasis {
        algebra: basis.algebra,
        h: (0..rank)
            .map(|i| basis.h[i].scale(&(&alpha[i] * &beta[i])))
            .collect(),
        e: (0..rank).map(|i| basis.e[i].scale(&alpha[i])).collect(),
        f: (0..rank).map(|i| basis.f[i].scale(&beta[i])).collect(),
    })
}
