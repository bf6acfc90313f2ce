//! The precomputed data every conjugacy query needs.

use std::sync::OnceLock;

use crate::algebraic::minimal_polynomial_is_irreducible;
use crate::conjugacy::node::Rules;
use crate::conjugacy::{build_base_q, BaseQTable, QSet, Solver};
use crate::error::Error;
use crate::quotient::{build_lift_table, build_quotient, LiftTable, QuotientGroup};
use crate::words::Word;

/// Quotient, lift table and base `Q`-sets. Immutable once built.
#[derive(Debug, Clone)]
pub struct Engine {
    quotient: QuotientGroup,
    lift: LiftTable,
    base: BaseQTable,
}

static SHARED: OnceLock<Engine> = OnceLock::new();

impl Engine {
    pub fn new() -> Result<Engine, Error> {
        assert!(
            minimal_polynomial_is_irreducible(),
            "norm comparison assumes an irreducible minimal polynomial"
        );
        let quotient = build_quotient()?;
        let lift = build_lift_table(&quotient)?;
        let base = build_base_q(&quotient, &lift)?;
        Ok(Engine { quotient, lift, base })
    }

    /// A process-wide instance, built on first use.
    pub fn shared() -> Result<&'static Engine, Error> {
        if let Some(e) = SHARED.get() {
            return Ok(e);
        }
        let e = Engine::new()?;
        Ok(SHARED.get_or_init(|| e))
    }

    pub fn quotient(&self) -> &QuotientGroup {
        &self.quotient
    }

    pub fn lift(&self) -> &LiftTable {
        &self.lift
    }

    pub fn base(&self) -> &BaseQTable {
        &self.base
    }

    pub(crate) fn rules(&self) -> Rules<'_> {
        Rules { q: &self.quotient, lift: &self.lift }
    }

    /// `Q(u, v)`: cosets `Kx` with `x⁻¹vx = u` in the group.
    pub fn q_set(&self, u: &Word, v: &Word) -> Result<QSet, Error> {
        Solver::new(self).q_set(u, v)
    }

    pub fn are_conjugate(&self, u: &Word, v: &Word) -> Result<bool, Error> {
        Ok(!self.q_set(u, v)?.is_empty())
    }
}
