//! The principal `osp(1|2)` embedding, its bosonic completion and the
//! highest-weight generators.
//!
//! From a Chevalley basis with inverse Cartan matrix `a^ij` the principal
//! triple is
//!
//! ```text
//! J_- = Σ_i f_i,   J_+ = Σ_i (Σ_j a^ij) e_i,   H = {J_+, J_-} = Σ_i (Σ_j a^ij) h_i.
//! ```
//!
//! In the diagonal realizations used here this evaluates to the closed forms
//! `J_- = diag_{-1}(1, ..., 1)`, `J_+ = diag_{+1}(n, -1, n-1, -2, ..., -n)`
//! and `H = diag_0(n, n-1, ..., -n)`, identical for `sl(n+1|n)` and for
//! `osp(2m±1|2m)` of the matching size.
//!
//! A highest-weight generator of grade `k` is an algebra element `M_k` with
//! `[H, M_k] = k M_k` and `[J_+, M_k} = 0`. Because the consecutive
//! eigenvalue gaps of `H` are all 1, the grade-`k` eigenspace of `ad_H` is
//! exactly the `k`-th diagonal band, and [`highest_weights_solve`] finds the
//! solutions by an exact kernel computation over that band. For
//! `sl(n+1|n)` the space is spanned by `M_1^k` with
//! `M_1 = diag_{+1}(n, 1, n-1, 2, ..., n)`; for `osp(2m±1|2m)` only the
//! grades `2+4q` and `3+4q` survive.

use serde::{Deserialize, Serialize};

use crate::algebras::{
    self, chevalley_basis, is_member, supermetric, AlgebraId, ChevalleyBasis, Family, FormatKind,
};
use crate::error::{Error, Result};
use crate::graded::GradedMatrix;
use crate::linsolve;
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::report::{Check, VerificationReport};

/// The odd generators `J_±` and Cartan element `H` of a principal
/// `osp(1|2)` embedding.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PrincipalTriple {
    pub j_minus: GradedMatrix,
    pub j_plus: GradedMatrix,
    pub h: GradedMatrix,
}

/// The bosonic completion `X_± = ½ {J_±, J_±}` of a principal triple.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BosonicPair {
    pub x_plus: GradedMatrix,
    pub x_minus: GradedMatrix,
}

/// Builds the principal triple from a Chevalley basis and the inverse Cartan
/// matrix of its algebra.
pub fn principal_osp12(basis: &ChevalleyBasis, a_inv: &Matrix) -> Result<PrincipalTriple> {
    let rank = basis.rank();
    if a_inv.size() != rank {
        return Err(Error::SizeMismatch {
            left: a_inv.size(),
            right: rank,
        });
    }
    let row_sum = |i: usize| -> Rational { (1..=rank).map(|j| a_inv.get(i, j).clone()).sum() };
    let mut j_minus = GradedMatrix::zero(basis.algebra.format());
    let mut j_plus = j_minus.clone();
    let mut h = j_minus.clone();
    for i in 0..rank {
        let c = row_sum(i + 1);
        j_minus = &j_minus + &basis.f[i];
        j_plus = &j_plus + &basis.e[i].scale(&c);
        h = &h + &basis.h[i].scale(&c);
    }
    Ok(PrincipalTriple { j_minus, j_plus, h })
}

/// The closed-form principal triple of `sl(n+1|n)` in diagonal format.
pub fn principal_closed(n: usize) -> PrincipalTriple {
    assert!(n >= 1, "n must be >= 1");
    let p = 2 * n + 1;
    let fmt = crate::graded::Format::alternating(p, 1).expect("valid size");
    let j_minus = Matrix::diag_band(-1, &vec![Rational::one(); p - 1], p).expect("band fits");
    // diag_{+1}(n, -1, n-1, -2, ..., -n): entry n+1-t at odd positions
    // 2t-1, entry -t at even positions 2t.
    let upper: Vec<Rational> = (1..=p - 1)
        .map(|pos| {
            if pos % 2 == 1 {
                Rational::from((n + 1 - pos.div_ceil(2)) as i64)
            } else {
                Rational::from(-((pos / 2) as i64))
            }
        })
        .collect();
    let j_plus = Matrix::diag_band(1, &upper, p).expect("band fits");
    let diag: Vec<Rational> = (0..p).map(|t| Rational::from(n as i64 - t as i64)).collect();
    let h = Matrix::diag_band(0, &diag, p).expect("band fits");
    let wrap = |m: Matrix| GradedMatrix::new(m, fmt.clone()).expect("size matches");
    PrincipalTriple {
        j_minus: wrap(j_minus),
        j_plus: wrap(j_plus),
        h: wrap(h),
    }
}

/// `X_± = ½ {J_±, J_±} = J_±²`.
pub fn bosonic_pair(triple: &PrincipalTriple) -> BosonicPair {
    let half = Rational::new(1, 2);
    BosonicPair {
        x_plus: triple
            .j_plus
            .graded_commutator(&triple.j_plus)
            .scale(&half),
        x_minus: triple
            .j_minus
            .graded_commutator(&triple.j_minus)
            .scale(&half),
    }
}

/// Checks the full `osp(1|2)` relation set on a triple, exactly:
///
/// `[H, J_±] = ±J_±`, `{J_+, J_-} = H`, `[H, X_±] = ±2X_±`,
/// `[X_+, X_-] = -H`, `[J_∓, X_±] = ±J_±`.
pub fn verify_osp12(triple: &PrincipalTriple) -> VerificationReport {
    let mut report = VerificationReport::new();
    let PrincipalTriple { j_minus, j_plus, h } = triple;
    let BosonicPair { x_plus, x_minus } = bosonic_pair(triple);
    let two = Rational::from(2);

    let mut eq = |name: &str, lhs: &GradedMatrix, rhs: &GradedMatrix| {
        report.push(Check::equality(name, lhs.matrix(), rhs.matrix()));
    };
    eq("[H, J_+] = J_+", &h.graded_commutator(j_plus), j_plus);
    eq(
        "[H, J_-] = -J_-",
        &h.graded_commutator(j_minus),
        &-j_minus,
    );
    eq("{J_+, J_-} = H", &j_plus.graded_commutator(j_minus), h);
    eq(
        "[H, X_+] = 2 X_+",
        &h.graded_commutator(&x_plus),
        &x_plus.scale(&two),
    );
    eq(
        "[H, X_-] = -2 X_-",
        &h.graded_commutator(&x_minus),
        &x_minus.scale(&-&two),
    );
    eq(
        "[X_+, X_-] = -H",
        &x_plus.graded_commutator(&x_minus),
        &-h,
    );
    eq(
        "[J_-, X_+] = J_+",
        &j_minus.graded_commutator(&x_plus),
        j_plus,
    );
    eq(
        "[J_+, X_-] = -J_-",
        &j_plus.graded_commutator(&x_minus),
        &-j_minus,
    );
    report
}

/// The closed-form grade-1 highest weight of `sl(n+1|n)`:
/// `M_1 = diag_{+1}(n, 1, n-1, 2, ..., n)`.
pub fn principal_m1(n: usize) -> GradedMatrix {
    assert!(n >= 1, "n must be >= 1");
    let p = 2 * n + 1;
    let fmt = crate::graded::Format::alternating(p, 1).expect("valid size");
    let upper: Vec<Rational> = (1..=p - 1)
        .map(|pos| {
            if pos % 2 == 1 {
                Rational::from((n + 1 - pos.div_ceil(2)) as i64)
            } else {
                Rational::from((pos / 2) as i64)
            }
        })
        .collect();
    GradedMatrix::new(Matrix::diag_band(1, &upper, p).expect("band fits"), fmt)
        .expect("size matches")
}

/// The closed-form highest weight `M_k = M_1^k` of `sl(n+1|n)` for
/// `1 <= k <= 2n`; supported on the `k`-th diagonal and symmetric about the
/// antidiagonal.
pub fn highest_weight_closed(n: usize, k: usize) -> Result<GradedMatrix> {
    if k < 1 || k > 2 * n {
        return Err(Error::GradeOutOfRange { grade: k as i64 });
    }
    let m1 = principal_m1(n);
    let power = m1.matrix().pow(k as u64);
    GradedMatrix::new(power, m1.format().clone())
}

/// Exact basis of the grade-`k` highest-weight space
/// `{ M in algebra : [H, M] = k M, [J_+, M} = 0 }` for a diagonal-format
/// algebra, computed by restricting to the `k`-th diagonal band and solving
/// the resulting linear system over the rationals.
///
/// Returned basis vectors are normalized so the first nonzero band entry
/// is 1. Grades beyond the band range give an empty basis.
pub fn highest_weights_solve(alg: &AlgebraId, k: i64) -> Result<Vec<GradedMatrix>> {
    if alg.format_kind() != FormatKind::Diagonal {
        return Err(Error::Unsupported(
            "the highest-weight solver works on the diagonal realization, where \
             ad_H eigenspaces are diagonal bands"
                .into(),
        ));
    }
    if k < 1 {
        return Err(Error::GradeOutOfRange { grade: k });
    }
    let p = alg.size();
    if k as usize > p - 1 {
        return Ok(Vec::new());
    }
    let fmt = alg.format();
    let band_len = p - k as usize;

    // J_+ of the matching principal triple; identical for sl and osp.
    let n_equiv = (p - 1) / 2;
    let triple = principal_closed(n_equiv);
    let j_plus = GradedMatrix::new(triple.j_plus.matrix().clone(), fmt.clone())?;

    // Unknowns: the band entries. Conditions: [J_+, E} = 0 entrywise, plus
    // the osp metric condition where applicable, stacked below.
    let metric = match alg.family() {
        Family::OspMinus | Family::OspPlus => Some(supermetric(alg)?),
        Family::Gl | Family::Sl => None,
    };
    let condition_blocks = if metric.is_some() { 2 } else { 1 };
    let mut rows = vec![vec![Rational::zero(); band_len]; condition_blocks * p * p];
    for t in 1..=band_len {
        let e = GradedMatrix::new(Matrix::unit_entry(t, t + k as usize, p)?, fmt.clone())?;
        let bracket = j_plus.graded_commutator(&e);
        for r in 1..=p {
            for s in 1..=p {
                rows[(r - 1) * p + (s - 1)][t - 1] = bracket.matrix().get(r, s).clone();
            }
        }
        if let Some(g) = &metric {
            let cond = &(e.supertranspose().matrix() * g) + &(g * e.matrix());
            for r in 1..=p {
                for s in 1..=p {
                    rows[p * p + (r - 1) * p + (s - 1)][t - 1] = cond.get(r, s).clone();
                }
            }
        }
    }

    let kernel = linsolve::nullspace(&rows, band_len);
    let mut basis = Vec::with_capacity(kernel.len());
    for v in kernel {
        let mut m = Matrix::diag_band(k, &v, p)?;
        // Normalize the leading band entry to 1.
        if let Some(first) = v.iter().find(|c| !c.is_zero()) {
            m = m.scale(&first.recip());
        }
        let gm = GradedMatrix::new(m, fmt.clone())?;
        debug_assert!(is_member(alg, &gm)?, "solver output must lie in {alg}");
        basis.push(gm);
    }
    Ok(basis)
}

/// Convenience: the principal triple of an algebra id, built from its
/// Chevalley basis and closed-form inverse Cartan matrix.
pub fn principal_for(alg: &AlgebraId) -> Result<PrincipalTriple> {
    let basis = chevalley_basis(alg)?;
    let a_inv = algebras::inverse_cartan(alg.family(), alg.rank())?;
    principal_osp12(&basis, &a_inv)
}
