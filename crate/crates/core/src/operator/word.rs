//! Free words in the generators and their normal form by elementary
//! rewriting.
//!
//! This route only knows the four local rules
//!
//! ```text
//! D X = X D + 1,   T X = q X T,   T D = q^{-1} D T,   T T^{-1} = 1
//! ```
//!
//! (plus their `T^{-1}` counterparts) and applies them to adjacent letters
//! until nothing is out of order. It shares no code with
//! [`Operator::compose`], so the two can be checked against each other.

use std::fmt;

use crate::laurent::QLaurent;
use crate::operator::algebra::{MonomialKey, Operator};
use crate::ring::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    X,
    D,
    T,
    TInv,
}

impl Generator {
    fn rank(self) -> u8 {
        match self {
            Generator::X => 0,
            Generator::D => 1,
            Generator::T | Generator::TInv => 2,
        }
    }

    pub fn to_operator(self) -> Operator {
        match self {
            Generator::X => Operator::x(),
            Generator::D => Operator::d(),
            Generator::T => Operator::t(1),
            Generator::TInv => Operator::t(-1),
        }
    }
}

/// `coeff * g_1 g_2 ... g_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Word {
    pub coeff: QLaurent,
    pub letters: Vec<Generator>,
}

impl Word {
    pub fn new(coeff: QLaurent, letters: Vec<Generator>) -> Self {
        Word { coeff, letters }
    }

    pub fn letters(letters: &[Generator]) -> Self {
        Word::new(QLaurent::one(), letters.to_vec())
    }

    /// Concatenation.
    pub fn concat(&self, o: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&o.letters);
        Word::new(&self.coeff * &o.coeff, letters)
    }
}

/// A finite sum of words.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Expr {
    pub words: Vec<Word>,
}

impl Expr {
    pub fn word(w: Word) -> Self {
        Expr { words: vec![w] }
    }

    pub fn sum(words: Vec<Word>) -> Self {
        Expr { words }
    }

    /// Formal product: all pairwise concatenations.
    pub fn product(&self, o: &Expr) -> Expr {
        let mut words = Vec::new();
        for a in &self.words {
            for b in &o.words {
                words.push(a.concat(b));
            }
        }
        Expr { words }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.coeff)?;
        for g in &self.letters {
            let s = match g {
                Generator::X => "X",
                Generator::D => "D",
                Generator::T => "T",
                Generator::TInv => "T⁻¹",
            };
            write!(f, "·{}", s)?;
        }
        Ok(())
    }
}

/// One rewriting step on the first out-of-order adjacent pair. Returns
/// `None` if the word is already normal.
fn rewrite_once(w: &Word) -> Option<Vec<Word>> {
    use Generator::*;
    let l = &w.letters;
    for i in 0..l.len().saturating_sub(1) {
        let (a, b) = (l[i], l[i + 1]);
        let splice = |mid: &[Generator], coeff: QLaurent| {
            let mut letters = l[..i].to_vec();
            letters.extend_from_slice(mid);
            letters.extend_from_slice(&l[i + 2..]);
            Word::new(coeff, letters)
        };
        let c = w.coeff.clone();
        let out = match (a, b) {
            (D, X) => vec![splice(&[X, D], c.clone()), splice(&[], c)],
            (T, X) => vec![splice(&[X, T], c.shift(1))],
            (TInv, X) => vec![splice(&[X, TInv], c.shift(-1))],
            (T, D) => vec![splice(&[D, T], c.shift(-1))],
            (TInv, D) => vec![splice(&[D, TInv], c.shift(1))],
            (T, TInv) | (TInv, T) => vec![splice(&[], c)],
            _ => {
                debug_assert!(a.rank() <= b.rank());
                continue;
            }
        };
        return Some(out);
    }
    None
}

fn key_of_normal_word(letters: &[Generator]) -> MonomialKey {
    let mut key = MonomialKey::ONE;
    for g in letters {
        match g {
            Generator::X => key.x_pow += 1,
            Generator::D => key.d_pow += 1,
            Generator::T => key.t_exp += 1,
            Generator::TInv => key.t_exp -= 1,
        }
    }
    key
}

/// Normal form of a sum of words by exhaustive rewriting.
pub fn normal_form(expr: &Expr) -> Operator {
    let mut stack: Vec<Word> = expr.words.clone();
    let mut out = Operator::zero();
    while let Some(w) = stack.pop() {
        if w.coeff.is_zero() {
            continue;
        }
        match rewrite_once(&w) {
            Some(next) => stack.extend(next),
            None => out.add_term(key_of_normal_word(&w.letters), &w.coeff),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    #[test]
    fn d_x() {
        let op = normal_form(&Expr::word(Word::letters(&[D, X])));
        assert_eq!(
            op,
            Operator::x()
                .compose(&Operator::d())
                .add(&Operator::identity())
        );
    }

    #[test]
    fn t_x() {
        let op = normal_form(&Expr::word(Word::letters(&[T, X])));
        assert_eq!(
            op,
            Operator::monomial(MonomialKey::new(1, 0, 1), QLaurent::q())
        );
    }

    #[test]
    fn t_d_x_against_monomial_action() {
        // Oracle: act with T, D, X successively on x^m and compare.
        let op = normal_form(&Expr::word(Word::letters(&[T, D, X])));
        for m in 0..=10usize {
            // X x^m = x^{m+1}; D -> (m+1) x^m; T -> (m+1) q^m x^m
            let act = op.act_on_monomial(m);
            assert_eq!(act.len(), 1);
            let c = &act[&m];
            assert_eq!(
                *c,
                QLaurent::monomial(crate::ExactScalar::int(m as i64 + 1), m as i64)
            );
        }
    }

    #[test]
    fn inverse_pairs_cancel() {
        let op = normal_form(&Expr::word(Word::letters(&[T, TInv, TInv, T])));
        assert_eq!(op, Operator::identity());
    }
}
