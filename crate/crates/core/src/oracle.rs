//! Independent routes to `s_λ[s_μ]` used to cross-check [`crate::plethysm`].
//!
//! The power-sum route expands `s_λ` and `s_μ` in power sums through
//! Murnaghan-Nakayama character values, applies `p_k[p_ρ] = p_{kρ}`
//! multiplicatively, and converts back with `p_ρ = Σ_λ χ^λ(ρ) s_λ`. The
//! finite-variable route substitutes the monomials of `s_μ(x_1..x_s)` into
//! `s_λ` literally. Neither touches composite-tableau enumeration.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition::{partitions_of_with, Partition};
use crate::symfunc::{convert, Basis, SymFunc};
use crate::tableau::enumerate_ssyt_bounded;

/// A symmetric function in the power-sum basis; coefficients may be
/// fractional.
pub type PowerSumExpansion = SymFunc;

/// Centraliser order `z_ρ = Π_i i^{m_i} m_i!`, where `m_i` is the number of
/// parts equal to `i`.
pub fn z(rho: &Partition) -> BigInt {
    let mut total = BigInt::one();
    let mut multiplicity = 0u32;
    let mut prev = 0;
    for &part in rho.parts() {
        if part == prev {
            multiplicity += 1;
        } else {
            multiplicity = 1;
            prev = part;
        }
        total *= BigInt::from(part) * BigInt::from(multiplicity);
    }
    total
}

type CharMemo = RwLock<HashMap<(Partition, Partition), i64>>;

fn memo() -> &'static CharMemo {
    static MEMO: OnceLock<CharMemo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Symmetric-group character `χ^λ(ρ)` by the Murnaghan-Nakayama rule.
pub fn character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: rho.size(),
        });
    }
    Ok(mn_rule(lambda, rho))
}

// Border strips are removed on the beta-set (first-column hook lengths): a
// strip of length r moves one bead from b to b - r onto an empty position,
// with sign (-1)^(beads jumped over).
fn mn_rule(lambda: &Partition, rho: &Partition) -> i64 {
    if rho.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), rho.clone());
    if let Some(&v) = memo().read().expect("character memo poisoned").get(&key) {
        return v;
    }
    let r = rho.part(0);
    let rest = Partition::from_sorted(rho.parts()[1..].to_vec());
    let len = lambda.len();
    let beta: Vec<usize> = (0..len).map(|i| lambda.part(i) + len - 1 - i).collect();
    let mut value = 0;
    for (i, &b) in beta.iter().enumerate() {
        let Some(target) = b.checked_sub(r) else {
            continue;
        };
        if beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| target < x && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let smaller =
            Partition::from_unsorted((0..len).map(|k| moved[k] - (len - 1 - k)).collect());
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        value += sign * mn_rule(&smaller, &rest);
    }
    memo()
        .write()
        .expect("character memo poisoned")
        .insert(key, value);
    value
}

fn rational(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

/// `s_λ = Σ_ρ χ^λ(ρ)/z_ρ p_ρ`.
pub fn schur_to_p(lambda: &Partition) -> Result<PowerSumExpansion> {
    schur_to_p_with(lambda, &Limits::default())
}

pub fn schur_to_p_with(lambda: &Partition, limits: &Limits) -> Result<PowerSumExpansion> {
    let n = lambda.size();
    let terms = partitions_of_with(n, limits)?
        .into_iter()
        .map(|rho| {
            let c = BigRational::new(character(lambda, &rho)?.into(), z(&rho));
            Ok((rho, c))
        })
        .collect::<Result<Vec<_>>>()?;
    SymFunc::from_terms(Basis::PowerSum, n, terms)
}

/// Schur expansion of a power-sum expansion via `p_ρ = Σ_λ χ^λ(ρ) s_λ`.
fn p_to_schur(f: &SymFunc, limits: &Limits) -> Result<SymFunc> {
    let shapes = partitions_of_with(f.degree(), limits)?;
    let mut out = BTreeMap::new();
    for (rho, c) in f.terms() {
        for lambda in &shapes {
            let chi = character(lambda, rho)?;
            if chi != 0 {
                *out.entry(lambda.clone()).or_insert_with(BigRational::zero) += c * rational(chi);
            }
        }
    }
    let s = SymFunc::from_map_unchecked(Basis::Schur, f.degree(), out);
    if !s.is_integral() {
        return Err(Error::InvariantViolation(
            "power-sum expansion is not integral in the Schur basis".into(),
        ));
    }
    Ok(s)
}

/// Monomial expansion of a power-sum expansion computed directly: the
/// coefficient of `m_λ` in `p_ρ` counts the ways to distribute the parts of
/// `ρ` into `l(λ)` labelled bins with bin sums `λ`.
pub fn powersum_to_monomial(f: &SymFunc) -> Result<SymFunc> {
    if f.basis() != Basis::PowerSum {
        return Err(Error::BasisMismatch {
            left: f.basis().tag(),
            right: 'p',
        });
    }
    let shapes = partitions_of_with(f.degree(), &Limits::default())?;
    let mut out = BTreeMap::new();
    for (rho, c) in f.terms() {
        for lambda in &shapes {
            let mut bins = lambda.parts().to_vec();
            let ways = distribute(rho.parts(), &mut bins);
            if ways != 0 {
                *out.entry(lambda.clone()).or_insert_with(BigRational::zero) += c * rational(ways);
            }
        }
    }
    Ok(SymFunc::from_map_unchecked(
        Basis::Monomial,
        f.degree(),
        out,
    ))
}

fn distribute(parts: &[usize], room: &mut [usize]) -> u64 {
    let Some((&first, rest)) = parts.split_first() else {
        return room.iter().all(|&r| r == 0) as u64;
    };
    let mut ways = 0;
    for i in 0..room.len() {
        if room[i] >= first {
            room[i] -= first;
            ways += distribute(rest, room);
            room[i] += first;
        }
    }
    ways
}

/// Conversions into or out of the power-sum basis.
pub fn convert_powersum(f: &SymFunc, target: Basis) -> Result<SymFunc> {
    let limits = Limits::default();
    match (f.basis(), target) {
        (from, to) if from == to => Ok(f.clone()),
        (Basis::PowerSum, to) => convert(&p_to_schur(f, &limits)?, to),
        (_, Basis::PowerSum) => {
            let s = convert(f, Basis::Schur)?;
            let mut out = SymFunc::zero(Basis::PowerSum, f.degree());
            for (lambda, c) in s.terms() {
                for (rho, d) in schur_to_p_with(lambda, &limits)?.terms() {
                    out.add_term(rho.clone(), c * d);
                }
            }
            Ok(out)
        }
        (from, to) => Err(Error::UnsupportedConversion {
            from: from.tag(),
            to: to.tag(),
        }),
    }
}

/// Product of two power-sum expansions (`p_α p_β = p_{α ∪ β}`).
fn p_multiply(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(Basis::PowerSum, f.degree() + g.degree());
    for (a, c) in f.terms() {
        for (b, d) in g.terms() {
            let mut parts = a.parts().to_vec();
            parts.extend_from_slice(b.parts());
            out.add_term(Partition::from_unsorted(parts), c * d);
        }
    }
    out
}

/// `p_k[f]` for `f` in the power-sum basis: every `p_i` becomes `p_{ki}`.
pub fn power_plethysm(k: usize, f: &SymFunc) -> Result<SymFunc> {
    if f.basis() != Basis::PowerSum {
        return Err(Error::BasisMismatch {
            left: f.basis().tag(),
            right: 'p',
        });
    }
    if k == 0 {
        return Err(Error::InvalidPartition("p_0 is not a power sum".into()));
    }
    let mut out = SymFunc::zero(Basis::PowerSum, k * f.degree());
    for (rho, c) in f.terms() {
        out.add_term(
            Partition::from_sorted(rho.parts().iter().map(|&p| k * p).collect()),
            c.clone(),
        );
    }
    Ok(out)
}

/// `s_λ[s_μ]` in the Schur basis through power sums.
pub fn p_plethysm_schur(lambda: &Partition, mu: &Partition) -> Result<SymFunc> {
    p_plethysm_schur_with(lambda, mu, &Limits::default())
}

pub fn p_plethysm_schur_with(
    lambda: &Partition,
    mu: &Partition,
    limits: &Limits,
) -> Result<SymFunc> {
    let mn = lambda.size() * mu.size();
    limits.check_product(mn)?;
    let inner = schur_to_p_with(mu, limits)?;
    let mut powers: HashMap<usize, SymFunc> = HashMap::new();
    let mut total = SymFunc::zero(Basis::PowerSum, mn);
    for (rho, c) in schur_to_p_with(lambda, limits)?.terms() {
        let mut product = SymFunc::from_terms(
            Basis::PowerSum,
            0,
            [(Partition::empty(), BigRational::one())],
        )?;
        for &k in rho.parts() {
            if let Entry::Vacant(slot) = powers.entry(k) {
                slot.insert(power_plethysm(k, &inner)?);
            }
            product = p_multiply(&product, &powers[&k]);
        }
        for (sigma, d) in product.terms() {
            total.add_term(sigma.clone(), c * d);
        }
    }
    p_to_schur(&total, limits)
}

/// Expands `s_λ(y_1, …, y_N)` where the `y_i` are the monomials of
/// `s_μ(x_1, …, x_s)`, one letter per `μ`-tableau (equal monomials from
/// different tableaux stay separate letters). Keys are exponent vectors of
/// length `s`.
pub fn finite_variable_expansion(
    lambda: &Partition,
    mu: &Partition,
    s: usize,
) -> BTreeMap<Vec<usize>, u64> {
    let exponent = |counts: &[usize]| {
        let mut v = counts.to_vec();
        v.resize(s, 0);
        v
    };
    let mut letters: Vec<Vec<usize>> = enumerate_ssyt_bounded(mu, s)
        .iter()
        .map(|t| exponent(t.weight().counts()))
        .collect();
    // All monomials share degree |μ|, so graded lex is plain lex; the sort is
    // stable, which fixes the order among equal monomials.
    letters.sort_by(|a, b| b.cmp(a));

    let mut out = BTreeMap::new();
    for u in enumerate_ssyt_bounded(lambda, letters.len()) {
        let mut monomial = vec![0; s];
        for &letter in u.rows().iter().flatten() {
            for (acc, e) in monomial.iter_mut().zip(&letters[letter - 1]) {
                *acc += e;
            }
        }
        *out.entry(monomial).or_insert(0) += 1;
    }
    out
}
