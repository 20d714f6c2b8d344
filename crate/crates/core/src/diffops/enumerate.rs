//! Holonomic sequence enumeration from a recursion and initial terms.

use super::diffop::DifferenceOperator;
use crate::error::{Error, Result};
use crate::exact::rat::Rat;

/// Extend `initial` (length = order of `r`) to A_0 ... A_n using
/// sum_i q_i(m) A_{m+i} = 0; fails on a vanishing leading coefficient.
pub fn holonomic_enumerate(
    r: &DifferenceOperator,
    initial: &[Rat],
    n: usize,
) -> Result<Vec<Rat>> {
    let ord = r.order();
    if ord == 0 {
        return Err(Error::Precondition("recursion of order 0 cannot be enumerated".into()));
    }
    if initial.len() != ord {
        return Err(Error::Precondition(format!(
            "expected {} initial terms, got {}",
            ord,
            initial.len()
        )));
    }
    let mut seq: Vec<Rat> = initial.to_vec();
    seq.reserve(n + 1);
    let lead = r.leading();
    for m in 0..=(n as i64 - ord as i64) {
        let lm = lead.eval(&Rat::from_int(m));
        if lm.is_zero() {
            return Err(Error::SingularStep { step: m });
        }
        let mut acc = Rat::zero();
        for i in 0..ord {
            let q = r.coeff(i);
            if q.is_zero() {
                continue;
            }
            acc += &(&q.eval(&Rat::from_int(m)) * &seq[m as usize + i]);
        }
        seq.push(&(-acc) / &lm);
    }
    seq.truncate(n + 1);
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::{Poly, Var};

    #[test]
    fn powers_of_two() {
        let r = DifferenceOperator::new(vec![
            Poly::from_ints(Var::N, &[-2]),
            Poly::one(Var::N),
        ]);
        let seq = holonomic_enumerate(&r, &[Rat::one()], 5).unwrap();
        let expect: Vec<Rat> = (0..=5).map(|k| Rat::from_int(1 << k)).collect();
        assert_eq!(seq, expect);
    }

    #[test]
    fn singular_step_is_reported() {
        // leading coefficient (n - 2) vanishes at step 2
        let r = DifferenceOperator::new(vec![
            Poly::one(Var::N),
            Poly::from_ints(Var::N, &[-2, 1]),
        ]);
        let e = holonomic_enumerate(&r, &[Rat::one()], 8).unwrap_err();
        assert_eq!(e, Error::SingularStep { step: 2 });
    }
}
