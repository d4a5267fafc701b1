use std::fmt;

use crate::laurent::QLaurent;
use crate::operator::algebra::Operator;
use crate::operator::bracket::OpAlgebra;
use crate::operator::tier2::Tier2Operator;

/// 2×2 block operator `[[a, b], [c, d]]`.
#[derive(Clone, PartialEq, Debug)]
pub struct Block2<T> {
    pub entries: [[T; 2]; 2],
}

/// Block operators with symbolic entries.
pub type BlockOp2 = Block2<Operator>;

impl<T: OpAlgebra> Block2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Block2 {
            entries: [[a, b], [c, d]],
        }
    }

    pub fn diag(a: T, d: T) -> Self {
        Block2::new(a, T::zero(), T::zero(), d)
    }

    /// Only the lower-left entry is nonzero.
    pub fn lower(c: T) -> Self {
        Block2::new(T::zero(), T::zero(), c, T::zero())
    }

    /// Only the upper-right entry is nonzero.
    pub fn upper(b: T) -> Self {
        Block2::new(T::zero(), b, T::zero(), T::zero())
    }

    pub fn identity() -> Self {
        Block2::diag(T::one(), T::one())
    }

    /// Pauli `σ₃ = diag(1, -1)`.
    pub fn sigma3() -> Self {
        Block2::diag(T::one(), T::one().scale(&QLaurent::from(-1)))
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i][j]
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Block2<U> {
        let e = &self.entries;
        Block2 {
            entries: [[f(&e[0][0]), f(&e[0][1])], [f(&e[1][0]), f(&e[1][1])]],
        }
    }
}

impl<T: OpAlgebra> OpAlgebra for Block2<T> {
    fn zero() -> Self {
        Block2::new(T::zero(), T::zero(), T::zero(), T::zero())
    }
    fn one() -> Self {
        Block2::identity()
    }
    fn plus(&self, o: &Self) -> Self {
        let (a, b) = (&self.entries, &o.entries);
        Block2::new(
            a[0][0].plus(&b[0][0]),
            a[0][1].plus(&b[0][1]),
            a[1][0].plus(&b[1][0]),
            a[1][1].plus(&b[1][1]),
        )
    }
    fn compose(&self, o: &Self) -> Self {
        let (a, b) = (&self.entries, &o.entries);
        let cell = |i: usize, j: usize| a[i][0].compose(&b[0][j]).plus(&a[i][1].compose(&b[1][j]));
        Block2::new(cell(0, 0), cell(0, 1), cell(1, 0), cell(1, 1))
    }
    fn scale(&self, c: &QLaurent) -> Self {
        self.map(|e| e.scale(c))
    }
}

impl Block2<Operator> {
    /// Conjugate transpose with entrywise operator adjoints.
    pub fn adjoint(&self) -> Self {
        let e = &self.entries;
        Block2::new(
            e[0][0].adjoint(),
            e[1][0].adjoint(),
            e[0][1].adjoint(),
            e[1][1].adjoint(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Operator::is_zero)
    }

    pub fn at_one(&self) -> Self {
        self.map(Operator::at_one)
    }

    pub fn to_tier2(&self) -> Block2<Tier2Operator> {
        self.map(|e| Tier2Operator::from(e))
    }
}

impl fmt::Display for Block2<Operator> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            e[0][0], e[0][1], e[1][0], e[1][1]
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_product_follows_matrix_rule() {
        let a = Operator::x();
        let b = Operator::d();
        let lower = BlockOp2::lower(a.clone());
        let upper = BlockOp2::upper(b.clone());
        let prod = upper.compose(&lower);
        assert_eq!(prod, BlockOp2::diag(b.compose(&a), Operator::zero()));
        assert!(lower.compose(&lower).is_zero());
    }

    #[test]
    fn adjoint_transposes() {
        let m = BlockOp2::upper(Operator::t(1));
        let adj = m.adjoint();
        assert_eq!(adj, BlockOp2::lower(Operator::t(1).adjoint()));
        assert_eq!(adj.adjoint(), m);
    }

    #[test]
    fn sigma3_squares_to_one() {
        let s = BlockOp2::sigma3();
        assert_eq!(s.compose(&s), BlockOp2::identity());
    }
}
