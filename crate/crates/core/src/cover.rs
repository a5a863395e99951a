//! Symbolic multiplication tables for covers.
//!
//! A cover of `A` multiplies like `A` up to a multiplier component: each
//! basis product picks up a formal generator, `eᵢ ∘ eⱼ = eᵢeⱼ + m_{ij}`.
//! Because the multiplier sits inside the center of the cover, expanding
//! `(eᵢ ∘ eⱼ) ∘ eₖ = eᵢ ∘ (eⱼ ∘ eₖ)` yields the linear relations
//!
//! ```text
//! Σₚ c[i][j][p] m_{pk} = Σₚ c[j][k][p] m_{ip}
//! ```
//!
//! among the generators. A change of basis first absorbs one generator per
//! dimension of `A′` (the "gauge" step); solving the relations on the rest
//! leaves a residual free set whose size is `dim M(A)` — computed by a route
//! entirely different from the cocycle-rank formula, which makes the two
//! ends of [`verify_cover_consistency`] independent oracles for each other.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{linear_combination, Algebra};
use crate::matrix::Matrix;
use crate::multiplier::{multiplier_dim, MultiplierError};
use crate::scalar::Scalar;
use crate::subspace::Subspace;

/// A formal multiplier generator attached to the basis product `eᵢeⱼ`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SymbolId {
    pub i: usize,
    pub j: usize,
}

impl SymbolId {
    /// Printed name, 1-based like handwritten tables: `m11`, `m12`, …
    pub fn name(&self) -> String {
        if self.i < 9 && self.j < 9 {
            format!("m{}{}", self.i + 1, self.j + 1)
        } else {
            format!("m[{},{}]", self.i + 1, self.j + 1)
        }
    }
}

impl fmt::Display for SymbolId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Debug for SymbolId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// One resolved relation: the pivot symbol expressed over the residual basis.
#[derive(Clone, Debug, Serialize)]
pub struct Relation {
    pub lhs: SymbolId,
    /// Pairs `(coefficient, basis symbol)`; empty means `lhs = 0`.
    pub rhs: Vec<(Scalar, SymbolId)>,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rhs.is_empty() {
            return write!(f, "{} = 0", self.lhs);
        }
        let mut parts = Vec::new();
        for (c, sym) in &self.rhs {
            if c.is_one() {
                parts.push(sym.name());
            } else if (-c).is_one() {
                parts.push(format!("-{}", sym.name()));
            } else {
                parts.push(format!("{}*{}", c, sym.name()));
            }
        }
        write!(f, "{} = {}", self.lhs, parts.join(" + "))
    }
}

/// How a symbol ends up after gauging and solving the relations.
#[derive(Clone, Debug, PartialEq)]
pub enum SymbolFate {
    /// Set to zero by the change of basis.
    Gauged,
    /// A residual basis element of the multiplier.
    Free,
    /// Forced equal to a combination of residual basis symbols.
    Forced(Vec<(Scalar, SymbolId)>),
}

/// The symbolic cover table of an algebra: its gauge choices, the resolved
/// associativity relations, and the residual multiplier basis.
#[derive(Clone)]
pub struct CoverTable {
    base: Algebra,
    gauge_eliminated: Vec<SymbolId>,
    relations: Vec<Relation>,
    multiplier_basis: Vec<SymbolId>,
}

impl CoverTable {
    pub fn base(&self) -> &Algebra {
        &self.base
    }

    /// Symbols absorbed by the change of basis, one per dimension of `A′`.
    pub fn gauge_eliminated(&self) -> &[SymbolId] {
        &self.gauge_eliminated
    }

    /// The relations in reduced form, sorted by left-hand symbol.
    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Residual free symbols; the count equals `dim M(A)`.
    pub fn multiplier_basis(&self) -> &[SymbolId] {
        &self.multiplier_basis
    }

    pub fn fate(&self, i: usize, j: usize) -> SymbolFate {
        let sym = SymbolId { i, j };
        if self.gauge_eliminated.contains(&sym) {
            return SymbolFate::Gauged;
        }
        if self.multiplier_basis.contains(&sym) {
            return SymbolFate::Free;
        }
        let rel = self
            .relations
            .iter()
            .find(|r| r.lhs == sym)
            .expect("every non-gauged symbol is free or pivot of one relation");
        SymbolFate::Forced(rel.rhs.clone())
    }

    /// Renders the table in the handwritten layout: one line per basis
    /// product with its surviving generator, then the relations and the
    /// residual basis.
    pub fn render_text(&self) -> String {
        let n = self.base.dim();
        let names = self.base.basis_names();
        let mut out = String::new();
        out.push_str("cover multiplication table:\n");
        for i in 0..n {
            let mut cells = Vec::new();
            for j in 0..n {
                let sym = SymbolId { i, j };
                let product = linear_combination(self.base.product_of_basis(i, j), names);
                let cell = if self.gauge_eliminated.contains(&sym) {
                    format!("{}*{} = {}", names[i], names[j], product)
                } else if product == "0" {
                    format!("{}*{} = {}", names[i], names[j], sym)
                } else {
                    format!("{}*{} = {} + {}", names[i], names[j], product, sym)
                };
                cells.push(format!("{cell:<24}"));
            }
            out.push_str("  ");
            out.push_str(cells.join(" ").trim_end());
            out.push('\n');
        }
        out.push_str(&format!(
            "gauge (set to 0 by change of basis): {}\n",
            self.gauge_eliminated
                .iter()
                .map(SymbolId::name)
                .collect::<Vec<_>>()
                .join(", ")
        ));
        out.push_str("relations:\n");
        if self.relations.is_empty() {
            out.push_str("  (none)\n");
        }
        for r in &self.relations {
            out.push_str(&format!("  {r}\n"));
        }
        out.push_str(&format!(
            "multiplier basis (dim {}): {}\n",
            self.multiplier_basis.len(),
            self.multiplier_basis
                .iter()
                .map(SymbolId::name)
                .collect::<Vec<_>>()
                .join(", ")
        ));
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Entry {
            i: usize,
            j: usize,
            product: String,
            symbol: Option<String>,
        }
        #[derive(Serialize)]
        struct RelationJson {
            lhs: String,
            rhs: Vec<(Scalar, String)>,
        }
        #[derive(Serialize)]
        struct CoverJson {
            base: serde_json::Value,
            table: Vec<Entry>,
            gauge_eliminated: Vec<String>,
            relations: Vec<RelationJson>,
            multiplier_basis: Vec<String>,
            multiplier_dim: usize,
        }
        let n = self.base.dim();
        let names = self.base.basis_names();
        let mut table = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let sym = SymbolId { i, j };
                table.push(Entry {
                    i,
                    j,
                    product: linear_combination(self.base.product_of_basis(i, j), names),
                    symbol: if self.gauge_eliminated.contains(&sym) {
                        None
                    } else {
                        Some(sym.name())
                    },
                });
            }
        }
        serde_json::to_value(CoverJson {
            base: self.base.to_json_value(),
            table,
            gauge_eliminated: self.gauge_eliminated.iter().map(SymbolId::name).collect(),
            relations: self
                .relations
                .iter()
                .map(|r| RelationJson {
                    lhs: r.lhs.name(),
                    rhs: r
                        .rhs
                        .iter()
                        .map(|(c, s)| (c.clone(), s.name()))
                        .collect(),
                })
                .collect(),
            multiplier_basis: self.multiplier_basis.iter().map(SymbolId::name).collect(),
            multiplier_dim: self.multiplier_basis.len(),
        })
        .expect("cover table serializes")
    }
}

impl fmt::Display for CoverTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

/// Builds the symbolic cover table of a nilpotent algebra.
///
/// Gauge choice: walking products in lexicographic `(i, j)` order, the first
/// product whose value adds a new pivot direction to the span of `A′` absorbs
/// its generator. The remaining generators are then subjected to the
/// associativity relations, row-reduced so that every forced symbol is
/// expressed over the lexicographically earliest possible free symbols.
pub fn cover_table(a: &Algebra) -> Result<CoverTable, MultiplierError> {
    if !a.is_nilpotent() {
        return Err(MultiplierError::NotNilpotent);
    }
    let n = a.dim();
    let derived = a.derived_ideal();

    // Gauge step.
    let mut gauge = Vec::new();
    let mut seen = Subspace::zero(n);
    'outer: for i in 0..n {
        for j in 0..n {
            if seen.dim() == derived.dim() {
                break 'outer;
            }
            let p = a.product_of_basis(i, j);
            if p.iter().all(Scalar::is_zero) || seen.contains(p) {
                continue;
            }
            seen = seen.with_vector(p);
            gauge.push(SymbolId { i, j });
        }
    }
    debug_assert_eq!(gauge.len(), derived.dim());

    // Remaining symbols, row-major; columns are laid out in *reverse* order
    // so that rref pivots land on the later symbols and the free residual
    // basis consists of the earliest ones.
    let symbols: Vec<SymbolId> = (0..n)
        .flat_map(|i| (0..n).map(move |j| SymbolId { i, j }))
        .filter(|s| !gauge.contains(s))
        .collect();
    let col_of: HashMap<SymbolId, usize> = symbols
        .iter()
        .enumerate()
        .map(|(idx, &s)| (s, symbols.len() - 1 - idx))
        .collect();
    let ncols = symbols.len();
    let sym_at = |col: usize| symbols[ncols - 1 - col];

    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let left = a.product_of_basis(i, j);
            let left_zero = left.iter().all(Scalar::is_zero);
            for k in 0..n {
                let right = a.product_of_basis(j, k);
                if left_zero && right.iter().all(Scalar::is_zero) {
                    continue;
                }
                let mut row = vec![Scalar::zero(); ncols];
                for (p, c) in left.iter().enumerate() {
                    if !c.is_zero() {
                        if let Some(&col) = col_of.get(&SymbolId { i: p, j: k }) {
                            row[col] += c;
                        }
                    }
                }
                for (p, c) in right.iter().enumerate() {
                    if !c.is_zero() {
                        if let Some(&col) = col_of.get(&SymbolId { i, j: p }) {
                            row[col] -= c;
                        }
                    }
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let (reduced, pivots) = Matrix::from_rows(ncols, rows).rref();

    let mut free: Vec<SymbolId> = (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(sym_at)
        .collect();
    free.sort();

    let mut relations = Vec::new();
    for (r, &p) in pivots.iter().enumerate() {
        let lhs = sym_at(p);
        let mut rhs = Vec::new();
        for c in 0..ncols {
            if c == p {
                continue;
            }
            let coeff = reduced.get(r, c);
            if !coeff.is_zero() {
                rhs.push((-coeff, sym_at(c)));
            }
        }
        rhs.sort_by_key(|(_, s)| *s);
        relations.push(Relation { lhs, rhs });
    }
    relations.sort_by_key(|r| r.lhs);

    Ok(CoverTable {
        base: a.clone(),
        gauge_eliminated: gauge,
        relations,
        multiplier_basis: free,
    })
}

/// Cross-checks the two computations of `dim M(A)`: the residual basis of
/// the symbolic cover table against the cocycle-rank formula.
pub fn verify_cover_consistency(a: &Algebra) -> Result<bool, MultiplierError> {
    let table = cover_table(a)?;
    Ok(table.multiplier_basis().len() == multiplier_dim(a)?)
}
