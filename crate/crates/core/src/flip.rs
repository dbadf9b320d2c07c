//! The ±1 flip game: vertices carry signs, and each vertex may perform at
//! most one operation (flip all of its neighbors, flip itself, or flip
//! itself and all of its neighbors). A plan that starts from all +1 and
//! returns to all +1 certifies an upper bound on the diagonal distance.
//!
//! Every operation is an XOR mask over the sign vector, so plans commute and
//! order-independence comes for free from the representation.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{words_for, Graph, VertexSet};

/// What a single vertex does in a plan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexOp {
    /// No operation.
    Idle,
    /// Flip all neighbors.
    FlipNeighbors,
    /// Flip itself.
    FlipSelf,
    /// Flip itself and all neighbors.
    FlipBoth,
}

/// A per-vertex assignment of operations with at least one non-idle entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperationPlan {
    ops: Vec<VertexOp>,
}

impl OperationPlan {
    pub fn new(ops: Vec<VertexOp>) -> Result<Self> {
        if ops.iter().all(|&op| op == VertexOp::Idle) {
            return Err(Error::InvalidInput(
                "operation plan must contain at least one operation".into(),
            ));
        }
        Ok(OperationPlan { ops })
    }

    pub fn ops(&self) -> &[VertexOp] {
        &self.ops
    }

    /// Number of vertices performing an operation.
    pub fn operation_count(&self) -> usize {
        self.ops.iter().filter(|&&op| op != VertexOp::Idle).count()
    }
}

/// Vertex signs: a set bit means −1, a clear bit +1. The start state is all +1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignState {
    n: usize,
    words: Vec<u64>,
}

impl SignState {
    pub fn all_plus(n: usize) -> Self {
        SignState {
            n,
            words: vec![0; words_for(n)],
        }
    }

    pub fn is_all_plus(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// +1 or −1 for vertex `v`.
    pub fn sign(&self, v: usize) -> i8 {
        assert!(v < self.n);
        if self.words[v / 64] >> (v % 64) & 1 == 1 {
            -1
        } else {
            1
        }
    }

    fn xor_row(&mut self, row: &[u64]) {
        for (dst, &src) in self.words.iter_mut().zip(row) {
            *dst ^= src;
        }
    }

    fn xor_bit(&mut self, v: usize) {
        self.words[v / 64] ^= 1 << (v % 64);
    }
}

/// Executes every operation of `plan` from the all-+1 start. The result does
/// not depend on any ordering of the operations.
pub fn apply_plan(g: &Graph, plan: &OperationPlan) -> Result<SignState> {
    if plan.ops.len() != g.vertex_count() {
        return Err(Error::InvalidInput(format!(
            "plan for {} vertices applied to graph on {}",
            plan.ops.len(),
            g.vertex_count()
        )));
    }
    let mut state = SignState::all_plus(g.vertex_count());
    for (v, &op) in plan.ops.iter().enumerate() {
        match op {
            VertexOp::Idle => {}
            VertexOp::FlipNeighbors => state.xor_row(g.row(v)),
            VertexOp::FlipSelf => state.xor_bit(v),
            VertexOp::FlipBoth => {
                state.xor_row(g.row(v));
                state.xor_bit(v);
            }
        }
    }
    Ok(state)
}

/// A nonempty set `A` together with `B(A)` and the certified cost `|A|+|B|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub a_set: VertexSet,
    pub b_set: VertexSet,
    pub cost: usize,
}

impl Witness {
    /// Builds the witness for `A` against `g`, deriving `B(A)` and the cost.
    pub fn from_a(g: &Graph, a_set: VertexSet) -> Result<Witness> {
        let b_set = g.b_set(&a_set)?;
        let cost = a_set.len() + b_set.len();
        Ok(Witness { a_set, b_set, cost })
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &VertexSet| {
            if s.is_empty() {
                return "-".to_string();
            }
            s.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(
            f,
            "A: {} | B: {} | cost: {}",
            join(&self.a_set),
            join(&self.b_set),
            self.cost
        )
    }
}

/// Compiles the canonical plan for a witness set `A`: members of `A` flip
/// their neighbors, adding a self-flip when their neighborhood inside `A` is
/// odd; members of `B(A)` flip themselves.
pub fn compile_witness(g: &Graph, a: &VertexSet) -> Result<OperationPlan> {
    let b = g.b_set(a)?;
    let mut ops = vec![VertexOp::Idle; g.vertex_count()];
    for v in a.iter() {
        let in_a = g.neighbors(v).intersection(a).len();
        ops[v] = if in_a.is_multiple_of(2) {
            VertexOp::FlipNeighbors
        } else {
            VertexOp::FlipBoth
        };
    }
    for v in b.iter() {
        ops[v] = VertexOp::FlipSelf;
    }
    OperationPlan::new(ops)
}

/// Compiles and executes the plan for `A`, returning whether the board comes
/// back to all +1 (it always does) and the cost `|A| + |B(A)|`.
pub fn verify_witness(g: &Graph, a: &VertexSet) -> Result<(bool, usize)> {
    let plan = compile_witness(g, a)?;
    let state = apply_plan(g, &plan)?;
    let cost = a.len() + g.b_set(a)?.len();
    Ok((state.is_all_plus(), cost))
}

/// Maximum vertex count for the exhaustive 4^n plan search.
pub const EXHAUSTIVE_PLAN_MAX: usize = 12;

/// Ground-truth search: tries every nonzero assignment of operations and
/// returns the fewest operations that restore all +1, with the first plan
/// attaining it (in base-4 counter order: digit 0=idle, 1=flip neighbors,
/// 2=flip self, 3=both).
pub fn min_operations_exhaustive(g: &Graph) -> Result<(usize, OperationPlan)> {
    let n = g.vertex_count();
    if n > EXHAUSTIVE_PLAN_MAX {
        return Err(Error::TooLarge {
            what: "exhaustive plan search",
            limit: EXHAUSTIVE_PLAN_MAX,
            got: n,
        });
    }
    // Per-vertex XOR masks for each operation; n <= 12 fits a single word.
    let masks: Vec<[u64; 4]> = (0..n)
        .map(|v| {
            let row = g.row(v)[0];
            let bit = 1u64 << v;
            [0, row, bit, row ^ bit]
        })
        .collect();

    let mut best: Option<(usize, u64)> = None;
    let total = 4u64.pow(n as u32);
    for code in 1..total {
        let mut state = 0u64;
        let mut count = 0usize;
        let mut c = code;
        for mask in &masks {
            let digit = (c & 3) as usize;
            state ^= mask[digit];
            count += usize::from(digit != 0);
            c >>= 2;
        }
        if state == 0 && best.is_none_or(|(bc, _)| count < bc) {
            best = Some((count, code));
        }
    }
    let (count, code) = best.expect("compiled witness plans always restore all +1");
    let mut ops = Vec::with_capacity(n);
    let mut c = code;
    for _ in 0..n {
        ops.push(match c & 3 {
            0 => VertexOp::Idle,
            1 => VertexOp::FlipNeighbors,
            2 => VertexOp::FlipSelf,
            _ => VertexOp::FlipBoth,
        });
        c >>= 2;
    }
    Ok((count, OperationPlan::new(ops)?))
}
