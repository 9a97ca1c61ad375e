//! A scalar wrapper that counts arithmetic operations.

use std::cell::Cell;

use arrowdpr_core::{Commutative, Scalar, SingularScalar};

thread_local! {
    static OPS: Cell<u64> = const { Cell::new(0) };
}

fn tick() {
    OPS.with(|c| c.set(c.get() + 1));
}

/// Runs `f` and returns its result with the number of scalar operations
/// (add, sub, mul, neg, conj, inv) performed on this thread meanwhile.
pub fn count_ops<R>(f: impl FnOnce() -> R) -> (R, u64) {
    let before = OPS.with(Cell::get);
    let out = f();
    (out, OPS.with(Cell::get) - before)
}

/// Wraps any scalar and bumps a thread-local counter on every arithmetic
/// operation. Zero tests and magnitudes are not counted.
#[derive(Clone, Debug, PartialEq)]
pub struct Counting<S>(pub S);

impl<S: Scalar> Scalar for Counting<S> {
    fn zero_like(&self) -> Self {
        Counting(self.0.zero_like())
    }
    fn one_like(&self) -> Self {
        Counting(self.0.one_like())
    }
    fn add(&self, rhs: &Self) -> Self {
        tick();
        Counting(self.0.add(&rhs.0))
    }
    fn sub(&self, rhs: &Self) -> Self {
        tick();
        Counting(self.0.sub(&rhs.0))
    }
    fn mul(&self, rhs: &Self) -> Self {
        tick();
        Counting(self.0.mul(&rhs.0))
    }
    fn neg(&self) -> Self {
        tick();
        Counting(self.0.neg())
    }
    fn conj(&self) -> Self {
        tick();
        Counting(self.0.conj())
    }
    fn inv(&self) -> Result<Self, SingularScalar> {
        tick();
        self.0.inv().map(Counting)
    }
    fn magnitude(&self) -> f64 {
        self.0.magnitude()
    }
    fn is_exact_zero(&self) -> bool {
        self.0.is_exact_zero()
    }
    fn same_shape(&self, other: &Self) -> bool {
        self.0.same_shape(&other.0)
    }
}

impl<S: Commutative> Commutative for Counting<S> {}
