//! A small abstract rewriting framework: terminating systems certified by a
//! potential function, normalization under a step-selection strategy, local
//! confluence checks and exhaustive normal-form search.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::table::Table12;
use crate::error::{Error, Result};

/// A rewriting system with a potential that strictly decreases along every
/// step.
pub trait RewriteSystem {
    type State: Clone + Ord;
    type Step: Copy + Ord;

    /// Steps applicable to `state`, in increasing order.
    fn steps(&self, state: &Self::State) -> Vec<Self::Step>;

    fn apply(&self, state: &Self::State, step: Self::Step) -> Self::State;

    fn potential(&self, state: &Self::State) -> u64;
}

/// Which applicable step to take next.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Strategy {
    #[default]
    SmallestFirst,
    LargestFirst,
    /// Uniformly random choice from a ChaCha8 stream with this seed.
    Random(u64),
}

/// Outcome of [`normalize`]: the final state and the steps taken.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalization<S, T> {
    pub normal_form: S,
    pub steps: Vec<T>,
    /// Potential of every visited state, starting with the input.
    pub potentials: Vec<u64>,
}

/// Rewrites `state` until no step applies.
///
/// Panics if a step fails to decrease the potential, since termination would
/// then be unproven.
pub fn normalize<R: RewriteSystem>(
    system: &R,
    state: &R::State,
    strategy: Strategy,
) -> Normalization<R::State, R::Step> {
    let mut rng = match strategy {
        Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut current = state.clone();
    let mut potentials = alloc::vec![system.potential(&current)];
    let mut taken = Vec::new();
    loop {
        let steps = system.steps(&current);
        if steps.is_empty() {
            break;
        }
        let step = match (strategy, rng.as_mut()) {
            (Strategy::LargestFirst, _) => steps[steps.len() - 1],
            (Strategy::Random(_), Some(r)) => steps[(r.next_u64() % steps.len() as u64) as usize],
            _ => steps[0],
        };
        current = system.apply(&current, step);
        let p = system.potential(&current);
        let last = *potentials.last().unwrap();
        assert!(p < last, "potential did not decrease ({last} -> {p})");
        potentials.push(p);
        taken.push(step);
    }
    Normalization { normal_form: current, steps: taken, potentials }
}

/// Whether every pair of one-step successors of `state` has the same normal
/// form (under the default strategy).
pub fn locally_confluent_at<R: RewriteSystem>(system: &R, state: &R::State) -> bool {
    let forms: BTreeSet<R::State> = system
        .steps(state)
        .into_iter()
        .map(|s| normalize(system, &system.apply(state, s), Strategy::SmallestFirst).normal_form)
        .collect();
    forms.len() <= 1
}

/// Every normal form reachable from `state` along any sequence of steps.
pub fn normal_forms<R: RewriteSystem>(system: &R, state: &R::State) -> BTreeSet<R::State> {
    fn visit<R: RewriteSystem>(
        system: &R,
        state: &R::State,
        memo: &mut BTreeMap<R::State, BTreeSet<R::State>>,
    ) -> BTreeSet<R::State> {
        if let Some(done) = memo.get(state) {
            return done.clone();
        }
        let steps = system.steps(state);
        let out = if steps.is_empty() {
            [state.clone()].into_iter().collect()
        } else {
            let mut acc = BTreeSet::new();
            for s in steps {
                acc.extend(visit(system, &system.apply(state, s), memo));
            }
            acc
        };
        memo.insert(state.clone(), out.clone());
        out
    }
    visit(system, state, &mut BTreeMap::new())
}

/// Descent resolution on benign 12-tables, with potential `ℓ`.
#[derive(Debug, Clone, Copy, Default)]
pub struct DescentResolution;

impl RewriteSystem for DescentResolution {
    type State = Table12;
    type Step = u32;

    fn steps(&self, state: &Table12) -> Vec<u32> {
        state.descents()
    }

    fn apply(&self, state: &Table12, step: u32) -> Table12 {
        state.resolve(step).expect("steps are descents of a benign table")
    }

    fn potential(&self, state: &Table12) -> u64 {
        state.ell()
    }
}

impl Table12 {
    /// The descent-free table reached by resolving descents.
    pub fn normalize(&self, strategy: Strategy) -> Result<Table12> {
        if !self.is_benign() {
            return Err(Error::NotBenign);
        }
        Ok(normalize(&DescentResolution, self, strategy).normal_form)
    }
}

/// Checks that all pairs of one-step resolutions of `t` normalize to the same
/// table.
pub fn check_local_confluence(t: &Table12) -> Result<bool> {
    if !t.is_benign() {
        return Err(Error::NotBenign);
    }
    Ok(locally_confluent_at(&DescentResolution, t))
}

#[cfg(test)]
mod tests {
    use crate::fixtures::*;
    use super::*;

    #[test]
    fn example_is_confluent() {
        let p = resolve_example();
        assert_eq!(check_local_confluence(&p), Ok(true));
        let forms = normal_forms(&DescentResolution, &p);
        assert_eq!(forms.len(), 1);
        let nf = forms.into_iter().next().unwrap();
        assert!(nf.is_rpp());
        for strategy in [Strategy::SmallestFirst, Strategy::LargestFirst, Strategy::Random(3), Strategy::Random(99)] {
            assert_eq!(p.normalize(strategy).unwrap(), nf);
        }
    }

    #[test]
    fn rpp_is_its_own_normal_form() {
        let (t, flipped, image) = involution_example();
        assert_eq!(t.normalize(Strategy::default()).unwrap(), t);
        assert_eq!(check_local_confluence(&t), Ok(true));
        assert_eq!(flipped.normalize(Strategy::LargestFirst).unwrap(), image);
    }

    #[test]
    fn potentials_decrease() {
        let run = normalize(&DescentResolution, &resolve_example(), Strategy::Random(5));
        assert!(run.potentials.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(run.potentials.len(), run.steps.len() + 1);
    }

    #[test]
    fn non_benign_rejected() {
        let t = table(&[(1, &[1, 1]), (1, &[2, 1]), (1, &[2, 2])]);
        assert_eq!(t.normalize(Strategy::default()), Err(Error::NotBenign));
        assert_eq!(check_local_confluence(&t), Err(Error::NotBenign));
    }
}
