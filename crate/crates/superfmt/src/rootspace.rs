//! Simple root systems read off from a matrix format.
//!
//! With the simple-root generators fixed to the first upper diagonal,
//! `e_i = E_{i,i+1}`, a generic diagonal Cartan element assigns one weight
//! symbol to each basis position: the even positions are numbered
//! `ε_1, ε_2, ...` in order and the odd positions `δ_1, δ_2, ...`. The `i`-th
//! simple root is the symbolic difference `w(i) - w(i+1)` with parity
//! `α(i) + α(i+1) mod 2`, so the number of odd simple roots equals the
//! number of adjacent sign changes in the format. Roots stay symbolic;
//! evaluation against concrete weights is a separate step.

use serde::{Deserialize, Serialize};

use crate::graded::Format;
use crate::rational::Rational;

/// Kind of a weight symbol: `ε` labels even positions, `δ` odd ones.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymbolKind {
    Eps,
    Delta,
}

/// A formal weight symbol `ε_index` or `δ_index`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WeightSymbol {
    pub kind: SymbolKind,
    pub index: usize,
}

impl std::fmt::Display for WeightSymbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.kind {
            SymbolKind::Eps => write!(f, "eps_{}", self.index),
            SymbolKind::Delta => write!(f, "delta_{}", self.index),
        }
    }
}

/// A simple root `positive - negative` with its parity.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SimpleRoot {
    pub positive: WeightSymbol,
    pub negative: WeightSymbol,
    pub parity: u8,
}

impl SimpleRoot {
    /// Evaluates the root on concrete weights: `eps[k-1]` is the value of
    /// `ε_k` and `delta[k-1]` of `δ_k`.
    pub fn evaluate(&self, eps: &[Rational], delta: &[Rational]) -> Rational {
        let value = |w: &WeightSymbol| match w.kind {
            SymbolKind::Eps => eps[w.index - 1].clone(),
            SymbolKind::Delta => delta[w.index - 1].clone(),
        };
        value(&self.positive) - value(&self.negative)
    }
}

impl std::fmt::Display for SimpleRoot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} - {} ({})",
            self.positive,
            self.negative,
            if self.parity == 0 { "even" } else { "odd" }
        )
    }
}

/// The weight symbol attached to every position of a format: even positions
/// are numbered `ε_1, ε_2, ...` in order, odd positions `δ_1, δ_2, ...`.
pub fn weight_symbols(fmt: &Format) -> Vec<WeightSymbol> {
    let mut eps = 0;
    let mut delta = 0;
    (1..=fmt.size())
        .map(|i| {
            if fmt.parity(i) == 0 {
                eps += 1;
                WeightSymbol {
                    kind: SymbolKind::Eps,
                    index: eps,
                }
            } else {
                delta += 1;
                WeightSymbol {
                    kind: SymbolKind::Delta,
                    index: delta,
                }
            }
        })
        .collect()
}

/// The simple root system of a format in the `e_i = E_{i,i+1}` convention:
/// `p - 1` roots `w(i) - w(i+1)` with parities `α(i) + α(i+1) mod 2`.
pub fn simple_root_system(fmt: &Format) -> Vec<SimpleRoot> {
    let symbols = weight_symbols(fmt);
    (1..fmt.size())
        .map(|i| SimpleRoot {
            positive: symbols[i - 1],
            negative: symbols[i],
            parity: fmt.entry_parity(i, i + 1),
        })
        .collect()
}

/// Number of odd simple roots of a format.
///
/// Computed two independent ways (adjacent sign changes in the involution,
/// odd parities in [`simple_root_system`]) which are asserted to agree.
pub fn odd_simple_root_count(fmt: &Format) -> usize {
    let from_signs = fmt.sign_changes();
    let from_roots = simple_root_system(fmt)
        .iter()
        .filter(|r| r.parity == 1)
        .count();
    assert_eq!(
        from_signs, from_roots,
        "sign-change and root-parity counts must agree"
    );
    from_signs
}

/// True when the format admits a completely fermionic simple root system,
/// i.e. when its signs alternate strictly (possible only when the even and
/// odd dimensions differ by at most one).
pub fn admits_fermionic_srs(fmt: &Format) -> bool {
    fmt.alternates()
}
