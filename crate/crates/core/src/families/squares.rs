//! The order-3 recursion satisfied by Hadamard squares of the
//! second-degree second-order solution sequences:
//!
//!   U(n)(n+3)^4 A_{n+3}
//!   - U(n+1) { U(n) U(n+1) + c (n+2)^4 } A_{n+2}
//!   - c U(n) { U(n) U(n+1) + c (n+2)^4 } A_{n+1}
//!   + c^3 U(n+1) (n+1)^4 A_n = 0,        U(n) = a (n+1)^2 + a (n+1) + b.

use crate::diffops::DifferenceOperator;
use crate::exact::poly::{Poly, Var};
use crate::exact::rat::Rat;

/// U(n) = a (n+1)^2 + a (n+1) + b.
pub fn u_poly(a: &Rat, b: &Rat) -> Poly {
    let np1 = Poly::from_ints(Var::N, &[1, 1]);
    &(&(&np1 * &np1).scale(a) + &np1.scale(a)) + &Poly::constant(Var::N, b.clone())
}

/// The displayed order-3 recursion as a difference operator.
pub fn hadamard_square_recursion(a: &Rat, b: &Rat, c: &Rat) -> DifferenceOperator {
    let u = u_poly(a, b);
    let u1 = u.shift_arg(&Rat::one());
    let lin_pow4 = |shift: i64| {
        Poly::from_linear_factors(Var::N, &vec![Rat::from_int(shift); 4])
    };
    // mixed = U(n) U(n+1) + c (n+2)^4
    let mixed = &(&u * &u1) + &lin_pow4(2).scale(c);
    let q3 = &u * &lin_pow4(3);
    let q2 = (&u1 * &mixed).scale(&Rat::from_int(-1));
    let q1 = (&u * &mixed).scale(&(-c));
    let q0 = (&u1 * &lin_pow4(1)).scale(&c.pow(3));
    DifferenceOperator::new(vec![q0, q1, q2, q3])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffops::{diff_to_de, holonomic_enumerate};
    use crate::families::hadamard::{deg2_second_order, solution_sequence};

    fn squares_satisfy(a: i64, b: i64, c: i64, n: usize) {
        let (a, b, c) = (Rat::from_int(a), Rat::from_int(b), Rat::from_int(c));
        let base = deg2_second_order(&a, &b, &c);
        let seq = solution_sequence(&base, n + 3).unwrap();
        let squares: Vec<Rat> = seq.iter().map(|v| v * v).collect();
        let rec = hadamard_square_recursion(&a, &b, &c);
        let enumerated = holonomic_enumerate(&rec, &squares[..3], n).unwrap();
        assert_eq!(&enumerated[..], &squares[..=n]);
    }

    #[test]
    fn row_a_squares() {
        // U(n) = 7 n^2 + 21 n + 16 for (a, b) = (7, 2)
        let u = u_poly(&Rat::from_int(7), &Rat::from_int(2));
        assert_eq!(u, Poly::from_ints(Var::N, &[16, 21, 7]));
        squares_satisfy(7, 2, 8, 20);
    }

    #[test]
    fn row_e_squares() {
        squares_satisfy(32, 12, -256, 20);
    }

    #[test]
    fn derived_de_has_expected_leading_factor() {
        // The dual differential equation has x^0 term Q0(theta) theta^4
        // with Q0(n) = a (n-2)^2 + a (n-2) + b.
        let (a, b, c) = (Rat::from_int(7), Rat::from_int(2), Rat::from_int(8));
        let rec = hadamard_square_recursion(&a, &b, &c);
        let l = diff_to_de(&rec);
        assert_eq!(l.degree(), 3);
        let q0 = u_poly(&a, &b).shift_arg(&Rat::from_int(-3)).with_var(Var::Theta);
        let expect = &q0 * &Poly::monomial(Var::Theta, Rat::one(), 4);
        // equal up to the canonical scale
        let ratio = &l.indicial().coeff(6) / &expect.coeff(6);
        assert_eq!(l.indicial(), expect.scale(&ratio));
    }
}
