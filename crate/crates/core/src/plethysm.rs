//! Plethysm `s_λ[s_μ]` through semistandard tableaux of composite shape
//! `λ[μ]`: a `λ`-shaped array whose cells hold semistandard `μ`-tableaux,
//! weakly increasing along rows and strictly increasing down columns in the
//! word order.
//!
//! The number `Y^ν` of such arrays with total weight `ν` is the coefficient of
//! `m_ν` in `s_λ[s_μ]`. The Schur coefficients follow by
//! `a^ν = Σ_κ Kinv[κ][ν] Y^κ`, or by the Jacobi-Trudi signed sum
//! `a^ν = Σ_π sgn(π) Y^{π*ν}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition::{partitions_of_with, Partition};
use crate::symfunc::{kostka_matrix_with, Basis, SymFunc};
use crate::tableau::{enumerate_ssyt_bounded, enumerate_ssyt_within, Tableau};

/// A semistandard tableau of composite shape `λ[μ]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PlethTableau {
    outer_shape: Partition,
    inner_shape: Partition,
    /// `cells[i][j]` is the `μ`-tableau sitting in cell `(i, j)` of `λ`.
    cells: Vec<Vec<Tableau>>,
}

impl PlethTableau {
    /// Validates both semistandard conditions.
    pub fn new(inner_shape: Partition, cells: Vec<Vec<Tableau>>) -> Result<Self> {
        let outer_shape = Partition::new(cells.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(format!("outer row lengths: {e}")))?;
        for t in cells.iter().flatten() {
            if t.shape() != &inner_shape {
                return Err(Error::ShapeMismatch {
                    left: t.shape().to_string(),
                    right: inner_shape.to_string(),
                });
            }
        }
        for (i, row) in cells.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau(format!("outer row {i} decreases")));
            }
            if i > 0 && row.iter().zip(&cells[i - 1]).any(|(below, up)| below <= up) {
                return Err(Error::InvalidTableau(format!(
                    "outer column strictness fails at row {i}"
                )));
            }
        }
        Ok(PlethTableau {
            outer_shape,
            inner_shape,
            cells,
        })
    }

    pub fn outer_shape(&self) -> &Partition {
        &self.outer_shape
    }

    pub fn inner_shape(&self) -> &Partition {
        &self.inner_shape
    }

    pub fn cells(&self) -> &[Vec<Tableau>] {
        &self.cells
    }

    /// The inner tableau in outer cell `(row, col)`.
    pub fn cell(&self, row: usize, col: usize) -> Option<&Tableau> {
        self.cells.get(row).and_then(|r| r.get(col))
    }

    /// Multiplicities of every entry across all inner tableaux.
    pub fn weight(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for &e in self
            .cells
            .iter()
            .flatten()
            .flat_map(|t| t.rows().iter().flatten())
        {
            if counts.len() < e {
                counts.resize(e, 0);
            }
            counts[e - 1] += 1;
        }
        counts
    }
}

impl fmt::Display for PlethTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .cells
            .iter()
            .map(|r| r.iter().map(|t| format!("({t})")).join(" "))
            .collect();
        f.write_str(&rows.join(" | "))
    }
}

/// Callback receiving the chosen candidate indices, row by row, and the candidates.
type Visit<'v> = dyn FnMut(&[Vec<usize>], &[Tableau]) + 'v;

/// Depth-first search over fillings of the outer shape by candidate inner
/// tableaux, which are held sorted in increasing word order so the ordering
/// constraints become index constraints.
struct CompositeSearch<'a> {
    outer: &'a Partition,
    candidates: Vec<Tableau>,
    weights: Vec<Vec<usize>>,
    budget: Option<Vec<usize>>,
    col_heights: Vec<usize>,
    chosen: Vec<Vec<usize>>,
}

impl<'a> CompositeSearch<'a> {
    fn new(outer: &'a Partition, mut candidates: Vec<Tableau>, budget: Option<Vec<usize>>) -> Self {
        candidates.sort();
        candidates.dedup();
        let width = budget.as_ref().map_or(0, Vec::len);
        let weights = candidates
            .iter()
            .map(|t| {
                let mut w = t.weight().counts().to_vec();
                w.resize(width.max(w.len()), 0);
                w
            })
            .collect();
        let col_heights = (0..outer.part(0))
            .map(|j| outer.parts().iter().take_while(|&&p| p > j).count())
            .collect();
        CompositeSearch {
            outer,
            candidates,
            weights,
            budget,
            col_heights,
            chosen: outer
                .parts()
                .iter()
                .map(|&p| Vec::with_capacity(p))
                .collect(),
        }
    }

    fn run(&mut self, visit: &mut Visit) {
        self.step(0, 0, visit);
    }

    fn fits(&self, idx: usize) -> bool {
        match &self.budget {
            None => true,
            Some(b) => self.weights[idx].iter().zip(b).all(|(w, have)| w <= have),
        }
    }

    fn charge(&mut self, idx: usize, sign: bool) {
        if let Some(b) = self.budget.as_mut() {
            for (have, w) in b.iter_mut().zip(&self.weights[idx]) {
                if sign {
                    *have -= w;
                } else {
                    *have += w;
                }
            }
        }
    }

    fn step(&mut self, row: usize, col: usize, visit: &mut Visit) {
        if row == self.outer.len() {
            visit(&self.chosen, &self.candidates);
            return;
        }
        let (next_row, next_col) = if col + 1 == self.outer.part(row) {
            (row + 1, 0)
        } else {
            (row, col + 1)
        };
        let mut low = 0;
        if col > 0 {
            low = low.max(self.chosen[row][col - 1]);
        }
        if row > 0 {
            low = low.max(self.chosen[row - 1][col] + 1);
        }
        let below = self.col_heights[col] - row - 1;
        let Some(end) = self.candidates.len().checked_sub(below) else {
            return;
        };
        for idx in low..end {
            if !self.fits(idx) {
                continue;
            }
            self.charge(idx, true);
            self.chosen[row].push(idx);
            self.step(next_row, next_col, visit);
            self.chosen[row].pop();
            self.charge(idx, false);
        }
    }
}

fn check_weight_size(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<()> {
    let mn = lambda.size() * mu.size();
    if nu.size() != mn {
        return Err(Error::SizeMismatch {
            left: nu.size(),
            right: mn,
        });
    }
    Ok(())
}

/// Inner tableaux that can occur in a composite tableau of weight `nu`.
fn candidates_for_weight(mu: &Partition, nu: &Partition) -> Vec<Tableau> {
    enumerate_ssyt_within(mu, nu.parts())
}

fn weighted_search<'a>(
    outer: &'a Partition,
    mu: &Partition,
    nu: &Partition,
) -> CompositeSearch<'a> {
    CompositeSearch::new(
        outer,
        candidates_for_weight(mu, nu),
        Some(nu.parts().to_vec()),
    )
}

/// All semistandard tableaux of shape `λ[μ]` and weight `ν`, in a fixed
/// deterministic order.
pub fn enumerate_pleth_weight(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<Vec<PlethTableau>> {
    check_weight_size(lambda, mu, nu)?;
    let mut out = Vec::new();
    weighted_search(lambda, mu, nu).run(&mut |chosen, candidates| {
        let cells = chosen
            .iter()
            .map(|row| row.iter().map(|&i| candidates[i].clone()).collect())
            .collect();
        out.push(PlethTableau {
            outer_shape: lambda.clone(),
            inner_shape: mu.clone(),
            cells,
        });
    });
    Ok(out)
}

/// `Y^ν_{λ[μ]}`: the number of semistandard tableaux of shape `λ[μ]` and
/// weight `ν`.
#[allow(non_snake_case)]
pub fn Y(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    check_weight_size(lambda, mu, nu)?;
    Ok(count_weighted(lambda, mu, nu))
}

fn count_weighted(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let mut count = 0;
    weighted_search(lambda, mu, nu).run(&mut |_, _| count += 1);
    count
}

/// Number of semistandard tableaux of shape `λ[μ]` with all entries in
/// `1..=max_entry`.
pub fn count_pleth_bounded(lambda: &Partition, mu: &Partition, max_entry: usize) -> u64 {
    let mut count = 0;
    CompositeSearch::new(lambda, enumerate_ssyt_bounded(mu, max_entry), None)
        .run(&mut |_, _| count += 1);
    count
}

/// Every composite tableau with entries in `1..=max_entry`.
pub fn enumerate_pleth_bounded(
    lambda: &Partition,
    mu: &Partition,
    max_entry: usize,
) -> Vec<PlethTableau> {
    let mut out = Vec::new();
    CompositeSearch::new(lambda, enumerate_ssyt_bounded(mu, max_entry), None).run(
        &mut |chosen, candidates| {
            out.push(PlethTableau {
                outer_shape: lambda.clone(),
                inner_shape: mu.clone(),
                cells: chosen
                    .iter()
                    .map(|row| row.iter().map(|&i| candidates[i].clone()).collect())
                    .collect(),
            });
        },
    );
    out
}

/// `s_λ[s_μ]` in the monomial basis; the coefficient of `m_ν` is `Y^ν`.
pub fn monomial_expansion(lambda: &Partition, mu: &Partition) -> Result<SymFunc> {
    monomial_expansion_with(lambda, mu, &Limits::default())
}

pub fn monomial_expansion_with(
    lambda: &Partition,
    mu: &Partition,
    limits: &Limits,
) -> Result<SymFunc> {
    let mn = lambda.size() * mu.size();
    limits.check_product(mn)?;
    let mut coeffs = BTreeMap::new();
    for nu in partitions_of_with(mn, limits)? {
        let y = count_weighted(lambda, mu, &nu);
        if y > 0 {
            coeffs.insert(nu, BigRational::from_integer(y.into()));
        }
    }
    SymFunc::from_terms(Basis::Monomial, mn, coeffs)
}

/// `a^ν = Σ_κ Kinv[κ][ν] Y^κ` with no sign check on the result.
fn schur_from_monomial(y: &SymFunc, limits: &Limits) -> Result<BTreeMap<Partition, BigInt>> {
    let km = kostka_matrix_with(y.degree(), limits)?;
    let ys = y.integer_coeffs()?;
    let mut out = BTreeMap::new();
    for nu in km.partitions() {
        let a: BigInt = ys
            .iter()
            .map(|(kappa, count)| km.kinv(kappa, nu) * count)
            .sum();
        if !a.is_zero() {
            out.insert(nu.clone(), a);
        }
    }
    Ok(out)
}

/// `s_λ[s_μ]` in the Schur basis via inverse Kostka numbers. Fails with
/// [`Error::InvariantViolation`] if any coefficient comes out negative.
pub fn schur_expansion(lambda: &Partition, mu: &Partition) -> Result<SymFunc> {
    schur_expansion_with(lambda, mu, &Limits::default())
}

pub fn schur_expansion_with(
    lambda: &Partition,
    mu: &Partition,
    limits: &Limits,
) -> Result<SymFunc> {
    let y = monomial_expansion_with(lambda, mu, limits)?;
    schur_from_monomial_checked(&y, limits)
}

fn schur_from_monomial_checked(y: &SymFunc, limits: &Limits) -> Result<SymFunc> {
    let a = schur_from_monomial(y, limits)?;
    if let Some((nu, c)) = a.iter().find(|(_, c)| c.is_negative()) {
        return Err(Error::InvariantViolation(format!(
            "negative Schur coefficient {c} at {nu}"
        )));
    }
    SymFunc::from_terms(
        Basis::Schur,
        y.degree(),
        a.into_iter()
            .map(|(k, c)| (k, BigRational::from_integer(c))),
    )
}

/// A permutation of `0..l`, stored as its images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Parse {
                    input: format!("{images:?}"),
                    reason: "not a permutation of 0..l".into(),
                });
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(l: usize) -> Self {
        Permutation((0..l).collect())
    }

    /// Swaps positions `a` and `b` of the identity on `0..l`.
    pub fn transposition(l: usize, a: usize, b: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..l).collect();
        if a >= l || b >= l {
            return Err(Error::Parse {
                input: format!("({a} {b})"),
                reason: format!("outside 0..{l}"),
            });
        }
        images.swap(a, b);
        Ok(Permutation(images))
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `+1` or `-1` by parity of the inversion count.
    pub fn sign(&self) -> i64 {
        let inversions = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &a)| self.0[i + 1..].iter().filter(|&&b| b < a).count())
            .sum::<usize>();
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All `l!` permutations of `0..l`.
    pub fn all(l: usize) -> impl Iterator<Item = Permutation> {
        (0..l).permutations(l).map(Permutation)
    }
}

/// `π * ν = (ν_{π(i)} - π(i) + i)_i`, with `ν` zero-padded to `π.len()`.
pub fn pi_star(pi: &Permutation, nu: &Partition) -> Vec<i64> {
    pi.images()
        .iter()
        .enumerate()
        .map(|(i, &target)| nu.part(target) as i64 - target as i64 + i as i64)
        .collect()
}

/// Turns a `π * ν` sequence into the partition indexing `h_{π*ν}`: `None`
/// when an entry is negative, otherwise zeros dropped and parts sorted.
fn normalize_composition(seq: &[i64]) -> Option<Partition> {
    if seq.iter().any(|&x| x < 0) {
        return None;
    }
    Some(Partition::from_unsorted(
        seq.iter().map(|&x| x as usize).collect(),
    ))
}

/// `a^ν` by the Jacobi-Trudi signed sum `Σ_π sgn(π) Y^{π*ν}`.
pub fn coeff_via_jacobi_trudi(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<BigInt> {
    coeff_via_jacobi_trudi_with(lambda, mu, nu, &Limits::default())
}

pub fn coeff_via_jacobi_trudi_with(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    limits: &Limits,
) -> Result<BigInt> {
    check_weight_size(lambda, mu, nu)?;
    check_jt_length(nu, limits)?;
    let mut memo: HashMap<Partition, u64> = HashMap::new();
    Ok(jacobi_trudi_sum(nu, |kappa| {
        *memo
            .entry(kappa.clone())
            .or_insert_with(|| count_weighted(lambda, mu, kappa))
    }))
}

/// Jacobi-Trudi coefficient read off an already computed monomial expansion.
pub fn jacobi_trudi_from_monomial(y: &SymFunc, nu: &Partition, limits: &Limits) -> Result<BigInt> {
    if nu.size() != y.degree() {
        return Err(Error::SizeMismatch {
            left: nu.size(),
            right: y.degree(),
        });
    }
    check_jt_length(nu, limits)?;
    let ys = y.integer_coeffs()?;
    Ok(jacobi_trudi_sum(nu, |kappa| {
        ys.get(kappa)
            .map_or(0, |c| u64::try_from(c).expect("Y is a count"))
    }))
}

fn check_jt_length(nu: &Partition, limits: &Limits) -> Result<()> {
    if nu.len() > limits.max_jacobi_trudi_length {
        return Err(Error::BoundExceeded {
            what: "l(nu) for Jacobi-Trudi",
            value: nu.len(),
            limit: limits.max_jacobi_trudi_length,
        });
    }
    Ok(())
}

fn jacobi_trudi_sum(nu: &Partition, mut y: impl FnMut(&Partition) -> u64) -> BigInt {
    let mut total = BigInt::zero();
    for pi in Permutation::all(nu.len()) {
        if let Some(kappa) = normalize_composition(&pi_star(&pi, nu)) {
            let count = y(&kappa);
            if count != 0 {
                total += BigInt::from(pi.sign()) * BigInt::from(count);
            }
        }
    }
    total
}

/// The predicted first term
/// `ν₀ = (mμ₁, …, mμ_{l'-1}, m(μ_{l'} - 1) + λ₁, λ₂, …, λ_l)`.
pub fn first_term(lambda: &Partition, mu: &Partition) -> Result<Partition> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition("lambda"));
    }
    if mu.is_empty() {
        return Err(Error::EmptyPartition("mu"));
    }
    let m = lambda.size();
    let last = mu.len() - 1;
    let mut parts: Vec<usize> = mu.parts()[..last].iter().map(|&p| m * p).collect();
    parts.push(m * (mu.part(last) - 1) + lambda.part(0));
    parts.extend_from_slice(&lambda.parts()[1..]);
    parts.retain(|&p| p > 0);
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvariantViolation(format!(
            "first term {parts:?} is not a partition"
        )));
    }
    Ok(Partition::from_sorted(parts))
}

/// The `count` largest `μ`-tableaux in the lexicographic order of their
/// monomials: `T₁` is superstandard, and `T_k` (k ≥ 2) is `T₁` with the last
/// cell of the bottom row raised to `l' + k - 1`.
pub fn leading_tableaux(mu: &Partition, count: usize) -> Result<Vec<Tableau>> {
    if mu.is_empty() {
        return Err(Error::EmptyPartition("mu"));
    }
    let first = Tableau::superstandard(mu);
    let bottom = mu.len() - 1;
    let last_col = mu.part(bottom) - 1;
    let mut out = Vec::with_capacity(count);
    for k in 1..=count {
        if k == 1 {
            out.push(first.clone());
        } else {
            out.push(first.with_entry(bottom, last_col, mu.len() + k - 1)?);
        }
    }
    Ok(out)
}

/// Every `(λ, μ)` with `λ ⊢ m`, `μ ⊢ n`, `m, n ≥ 1` and `mn ≤ max_product`,
/// ordered by `mn`, then `m`, then revlex-descending `λ` and `μ`.
pub fn shape_pairs(max_product: usize, limits: &Limits) -> Result<Vec<(Partition, Partition)>> {
    let mut sizes: Vec<(usize, usize)> = (1..=max_product)
        .flat_map(|m| (1..=max_product / m).map(move |n| (m, n)))
        .collect();
    sizes.sort_by_key(|&(m, n)| (m * n, m));
    let mut out = Vec::new();
    for (m, n) in sizes {
        let mus = partitions_of_with(n, limits)?;
        for lambda in partitions_of_with(m, limits)? {
            for mu in &mus {
                out.push((lambda.clone(), mu.clone()));
            }
        }
    }
    Ok(out)
}

/// Outcome of [`verify_first_term`] for one `(λ, μ)` pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionReport {
    pub lambda: Partition,
    pub mu: Partition,
    /// `Y^ν` for every `ν` with a non-zero value.
    pub monomial_coeffs: BTreeMap<Partition, BigInt>,
    /// `a^ν` for every `ν` with a non-zero value.
    pub schur_coeffs: BTreeMap<Partition, BigInt>,
    pub predicted_first_term: Partition,
    pub observed_first_term: Partition,
    pub first_term_coefficient: BigInt,
    pub checks: BTreeMap<String, bool>,
}

pub mod check {
    pub const FIRST_TERM_MATCHES: &str = "first_term_matches";
    pub const FIRST_TERM_COEFFICIENT_ONE: &str = "first_term_coefficient_one";
    pub const MONOMIAL_MAX_IS_FIRST_TERM: &str = "monomial_max_is_first_term";
    pub const MONOMIAL_FIRST_COEFFICIENT_ONE: &str = "monomial_first_coefficient_one";
    pub const Y_DOMINATES_A: &str = "y_dominates_a";
    pub const SCHUR_NONNEGATIVE: &str = "schur_nonnegative";
    pub const ORACLE_AGREEMENT: &str = "oracle_agreement";
}

impl ExpansionReport {
    pub fn passed(&self) -> bool {
        self.checks.values().all(|&ok| ok)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|(_, &ok)| !ok)
            .map(|(k, _)| k.as_str())
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct CoeffJson {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ReportJson {
    lambda: Partition,
    mu: Partition,
    monomial_coeffs: Vec<CoeffJson>,
    schur_coeffs: Vec<CoeffJson>,
    predicted_first_term: Partition,
    observed_first_term: Partition,
    first_term_coefficient: String,
    checks: BTreeMap<String, bool>,
}

fn coeffs_to_json(map: &BTreeMap<Partition, BigInt>) -> Vec<CoeffJson> {
    map.iter()
        .rev()
        .map(|(k, c)| CoeffJson {
            partition: k.clone(),
            coeff: c.to_string(),
        })
        .collect()
}

fn coeffs_from_json<E: serde::de::Error>(
    terms: Vec<CoeffJson>,
) -> std::result::Result<BTreeMap<Partition, BigInt>, E> {
    terms
        .into_iter()
        .map(|t| {
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| E::custom(format!("bad coefficient {:?}", t.coeff)))?;
            Ok((t.partition, c))
        })
        .collect()
}

impl Serialize for ExpansionReport {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        ReportJson {
            lambda: self.lambda.clone(),
            mu: self.mu.clone(),
            monomial_coeffs: coeffs_to_json(&self.monomial_coeffs),
            schur_coeffs: coeffs_to_json(&self.schur_coeffs),
            predicted_first_term: self.predicted_first_term.clone(),
            observed_first_term: self.observed_first_term.clone(),
            first_term_coefficient: self.first_term_coefficient.to_string(),
            checks: self.checks.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExpansionReport {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = ReportJson::deserialize(deserializer)?;
        Ok(ExpansionReport {
            lambda: raw.lambda,
            mu: raw.mu,
            monomial_coeffs: coeffs_from_json::<D::Error>(raw.monomial_coeffs)?,
            schur_coeffs: coeffs_from_json::<D::Error>(raw.schur_coeffs)?,
            predicted_first_term: raw.predicted_first_term,
            observed_first_term: raw.observed_first_term,
            first_term_coefficient: raw
                .first_term_coefficient
                .parse()
                .map_err(|_| D::Error::custom("bad first_term_coefficient"))?,
            checks: raw.checks,
        })
    }
}

/// Computes both expansions of `s_λ[s_μ]` and checks the first-term theorem,
/// its monomial counterpart, `Y^ν ≥ a^ν ≥ 0`, and optionally agreement with
/// the power-sum oracle. Failed checks are reported, not raised.
pub fn verify_first_term(
    lambda: &Partition,
    mu: &Partition,
    use_oracle: bool,
) -> Result<ExpansionReport> {
    verify_first_term_with(lambda, mu, use_oracle, &Limits::default())
}

pub fn verify_first_term_with(
    lambda: &Partition,
    mu: &Partition,
    use_oracle: bool,
    limits: &Limits,
) -> Result<ExpansionReport> {
    let predicted = first_term(lambda, mu)?;
    let y_func = monomial_expansion_with(lambda, mu, limits)?;
    let monomial_coeffs = y_func.integer_coeffs()?;
    let schur_coeffs = schur_from_monomial(&y_func, limits)?;

    let observed =
        schur_coeffs.keys().next_back().cloned().ok_or_else(|| {
            Error::InvariantViolation(format!("s_{lambda}[s_{mu}] came out zero"))
        })?;
    let first_term_coefficient = schur_coeffs[&observed].clone();
    let y_max = monomial_coeffs.keys().next_back();
    let y_at = |nu: &Partition| monomial_coeffs.get(nu).cloned().unwrap_or_default();

    let mut checks = BTreeMap::new();
    checks.insert(check::FIRST_TERM_MATCHES.to_string(), observed == predicted);
    checks.insert(
        check::FIRST_TERM_COEFFICIENT_ONE.to_string(),
        first_term_coefficient.is_one(),
    );
    checks.insert(
        check::MONOMIAL_MAX_IS_FIRST_TERM.to_string(),
        y_max == Some(&predicted),
    );
    checks.insert(
        check::MONOMIAL_FIRST_COEFFICIENT_ONE.to_string(),
        y_at(&predicted).is_one(),
    );
    checks.insert(
        check::Y_DOMINATES_A.to_string(),
        schur_coeffs.iter().all(|(nu, a)| &y_at(nu) >= a),
    );
    checks.insert(
        check::SCHUR_NONNEGATIVE.to_string(),
        schur_coeffs.values().all(|a| !a.is_negative()),
    );
    if use_oracle {
        let oracle = crate::oracle::p_plethysm_schur_with(lambda, mu, limits)?.integer_coeffs()?;
        checks.insert(check::ORACLE_AGREEMENT.to_string(), oracle == schur_coeffs);
    }

    Ok(ExpansionReport {
        lambda: lambda.clone(),
        mu: mu.clone(),
        monomial_coeffs,
        schur_coeffs,
        predicted_first_term: predicted,
        observed_first_term: observed,
        first_term_coefficient,
        checks,
    })
}
