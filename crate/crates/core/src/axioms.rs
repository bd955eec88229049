//! Randomised checking of the semiring axioms.

use std::fmt;

use rand::Rng;

use crate::semiring::Semiring;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    AddAssociative,
    MulAssociative,
    AddCommutative,
    MulCommutative,
    LeftDistributive,
    RightDistributive,
    AddIdentity,
    MulIdentity,
    ZeroAbsorbs,
    ZeroNotOne,
    Idempotent,
    Invertible,
}

impl Axiom {
    pub const ALL: [Axiom; 12] = [
        Axiom::AddAssociative,
        Axiom::MulAssociative,
        Axiom::AddCommutative,
        Axiom::MulCommutative,
        Axiom::LeftDistributive,
        Axiom::RightDistributive,
        Axiom::AddIdentity,
        Axiom::MulIdentity,
        Axiom::ZeroAbsorbs,
        Axiom::ZeroNotOne,
        Axiom::Idempotent,
        Axiom::Invertible,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Axiom::AddAssociative => "add-associative",
            Axiom::MulAssociative => "mul-associative",
            Axiom::AddCommutative => "add-commutative",
            Axiom::MulCommutative => "mul-commutative",
            Axiom::LeftDistributive => "left-distributive",
            Axiom::RightDistributive => "right-distributive",
            Axiom::AddIdentity => "add-identity",
            Axiom::MulIdentity => "mul-identity",
            Axiom::ZeroAbsorbs => "zero-absorbs",
            Axiom::ZeroNotOne => "zero-not-one",
            Axiom::Idempotent => "idempotent",
            Axiom::Invertible => "invertible",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum AxiomOutcome {
    Passed,
    /// First sampled counterexample, rendered with `Debug`.
    Failed(String),
    /// The descriptor does not claim this property.
    NotClaimed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AxiomReport {
    pub ring: String,
    pub trials: usize,
    pub outcomes: Vec<(Axiom, AxiomOutcome)>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes
            .iter()
            .all(|(_, o)| !matches!(o, AxiomOutcome::Failed(_)))
    }

    pub fn outcome(&self, axiom: Axiom) -> &AxiomOutcome {
        self.outcomes
            .iter()
            .find(|(a, _)| *a == axiom)
            .map(|(_, o)| o)
            .expect("every axiom is reported")
    }

    pub fn failures(&self) -> impl Iterator<Item = (Axiom, &str)> {
        self.outcomes.iter().filter_map(|(a, o)| match o {
            AxiomOutcome::Failed(c) => Some((*a, c.as_str())),
            _ => None,
        })
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} ({} trials)", self.ring, self.trials)?;
        for (axiom, outcome) in &self.outcomes {
            match outcome {
                AxiomOutcome::Passed => writeln!(f, "  {axiom:<20} pass")?,
                AxiomOutcome::NotClaimed => writeln!(f, "  {axiom:<20} not claimed")?,
                AxiomOutcome::Failed(c) => writeln!(f, "  {axiom:<20} FAIL  {c}")?,
            }
        }
        Ok(())
    }
}

/// Samples `trials` triples from `sampler` and checks every axiom the
/// descriptor claims. Failures are recorded with the first counterexample
/// found; they are data, not errors.
pub fn check_axioms<S, R, F>(ring: &S, mut sampler: F, rng: &mut R, trials: usize) -> AxiomReport
where
    S: Semiring,
    R: Rng + ?Sized,
    F: FnMut(&mut R) -> S::Elem,
{
    let mut failed: Vec<Option<String>> = vec![None; Axiom::ALL.len()];
    let mut fail = |axiom: Axiom, msg: String| {
        let slot = &mut failed[axiom as usize];
        if slot.is_none() {
            *slot = Some(msg);
        }
    };

    let eq = |a: &S::Elem, b: &S::Elem| ring.approx_eq(a, b);
    let zero = ring.zero();
    let one = ring.one();

    if zero == one {
        fail(Axiom::ZeroNotOne, format!("0̸ = 1̄ = {zero:?}"));
    }

    for _ in 0..trials {
        let a = sampler(rng);
        let b = sampler(rng);
        let c = sampler(rng);

        let l = ring.add(&ring.add(&a, &b), &c);
        let r = ring.add(&a, &ring.add(&b, &c));
        if !eq(&l, &r) {
            fail(
                Axiom::AddAssociative,
                format!("a={a:?} b={b:?} c={c:?}: (a⊕b)⊕c={l:?} a⊕(b⊕c)={r:?}"),
            );
        }

        let l = ring.mul(&ring.mul(&a, &b), &c);
        let r = ring.mul(&a, &ring.mul(&b, &c));
        if !eq(&l, &r) {
            fail(
                Axiom::MulAssociative,
                format!("a={a:?} b={b:?} c={c:?}: (a⊙b)⊙c={l:?} a⊙(b⊙c)={r:?}"),
            );
        }

        let l = ring.add(&a, &b);
        let r = ring.add(&b, &a);
        if !eq(&l, &r) {
            fail(
                Axiom::AddCommutative,
                format!("a={a:?} b={b:?}: a⊕b={l:?} b⊕a={r:?}"),
            );
        }

        if ring.is_commutative() {
            let l = ring.mul(&a, &b);
            let r = ring.mul(&b, &a);
            if !eq(&l, &r) {
                fail(
                    Axiom::MulCommutative,
                    format!("a={a:?} b={b:?}: a⊙b={l:?} b⊙a={r:?}"),
                );
            }
        }

        let l = ring.mul(&a, &ring.add(&b, &c));
        let r = ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c));
        if !eq(&l, &r) {
            fail(
                Axiom::LeftDistributive,
                format!("a={a:?} b={b:?} c={c:?}: a⊙(b⊕c)={l:?} (a⊙b)⊕(a⊙c)={r:?}"),
            );
        }

        let l = ring.mul(&ring.add(&a, &b), &c);
        let r = ring.add(&ring.mul(&a, &c), &ring.mul(&b, &c));
        if !eq(&l, &r) {
            fail(
                Axiom::RightDistributive,
                format!("a={a:?} b={b:?} c={c:?}: (a⊕b)⊙c={l:?} (a⊙c)⊕(b⊙c)={r:?}"),
            );
        }

        if !eq(&ring.add(&zero, &a), &a) {
            fail(Axiom::AddIdentity, format!("a={a:?}: 0̸⊕a ≠ a"));
        }

        if !eq(&ring.mul(&one, &a), &a) || !eq(&ring.mul(&a, &one), &a) {
            fail(Axiom::MulIdentity, format!("a={a:?}: 1̄⊙a or a⊙1̄ ≠ a"));
        }

        if !eq(&ring.mul(&zero, &a), &zero) || !eq(&ring.mul(&a, &zero), &zero) {
            fail(Axiom::ZeroAbsorbs, format!("a={a:?}: 0̸⊙a or a⊙0̸ ≠ 0̸"));
        }

        if ring.is_idempotent() && !eq(&ring.add(&a, &a), &a) {
            fail(
                Axiom::Idempotent,
                format!("a={a:?}: a⊕a={:?}", ring.add(&a, &a)),
            );
        }

        if ring.is_semifield() && !ring.is_zero(&a) {
            match ring.inverse(&a) {
                Some(inv) if eq(&ring.mul(&a, &inv), &one) => {}
                Some(inv) => fail(
                    Axiom::Invertible,
                    format!("a={a:?}: a⊙a⁻¹={:?}", ring.mul(&a, &inv)),
                ),
                None => fail(Axiom::Invertible, format!("a={a:?} has no inverse")),
            }
        }
    }

    let outcomes = Axiom::ALL
        .iter()
        .map(|&axiom| {
            let claimed = match axiom {
                Axiom::MulCommutative => ring.is_commutative(),
                Axiom::Idempotent => ring.is_idempotent(),
                Axiom::Invertible => ring.is_semifield(),
                _ => true,
            };
            let outcome = if !claimed {
                AxiomOutcome::NotClaimed
            } else {
                match failed[axiom as usize].take() {
                    Some(msg) => AxiomOutcome::Failed(msg),
                    None => AxiomOutcome::Passed,
                }
            };
            (axiom, outcome)
        })
        .collect();

    AxiomReport {
        ring: ring.name(),
        trials,
        outcomes,
    }
}
