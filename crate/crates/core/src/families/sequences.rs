//! Exact closed-form coefficient sequences for the cataloged operators,
//! used as independent cross-checks on every holonomic pipeline.

use crate::error::{Error, Result};
use crate::exact::rat::Rat;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Integer binomial coefficient, 0 for k < 0 or k > n.
pub fn binom_int(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n || n < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Generalized binomial C(a, k) = a (a-1) ... (a-k+1) / k! for rational a.
pub fn binom_rat(a: &Rat, k: i64) -> Rat {
    if k < 0 {
        return Rat::zero();
    }
    let mut acc = Rat::one();
    for i in 0..k {
        acc = &acc * &(a - &Rat::from_int(i));
        acc = &acc / &Rat::from_int(i + 1);
    }
    acc
}

/// Pochhammer symbol (a)_n = a (a+1) ... (a+n-1).
pub fn pochhammer(a: &Rat, n: i64) -> Rat {
    let mut acc = Rat::one();
    for i in 0..n {
        acc = &acc * &(a + &Rat::from_int(i));
    }
    acc
}

/// Harmonic number H_n.
pub fn harmonic(n: i64) -> Rat {
    let mut acc = Rat::zero();
    for j in 1..=n {
        acc += &Rat::frac(1, j);
    }
    acc
}

/// psi(n + a) - psi(a) = sum_{j=0}^{n-1} 1/(a + j), exactly rational.
pub fn psi_diff(a: &Rat, n: i64) -> Rat {
    let mut acc = Rat::zero();
    for j in 0..n {
        acc = &acc + &(a + &Rat::from_int(j)).recip();
    }
    acc
}

/// Sums of squared multinomial coefficients over `parts` parts:
/// A_n = sum_{i_1 + ... + i_p = n} (n! / (i_1! ... i_p!))^2, computed by
/// the convolution A^{(p)}_n = sum_i C(n,i)^2 A^{(p-1)}_{n-i}.
fn multinomial_square_sums(parts: u32, n_max: i64) -> Vec<BigInt> {
    let mut acc: Vec<BigInt> = (0..=n_max).map(|_| BigInt::one()).collect();
    for _ in 2..=parts {
        let mut next = vec![BigInt::zero(); acc.len()];
        for (n, slot) in next.iter_mut().enumerate() {
            for i in 0..=n {
                let b = binom_int(n as i64, i as i64);
                *slot += &b * &b * &acc[n - i];
            }
        }
        acc = next;
    }
    acc
}

/// (6n)! / ((3n)! (2n)! n!).
fn sextic_factorial_ratio(n: i64) -> BigInt {
    let fact = |m: i64| -> BigInt {
        let mut acc = BigInt::one();
        for i in 2..=m {
            acc *= BigInt::from(i);
        }
        acc
    };
    fact(6 * n) / (fact(3 * n) * fact(2 * n) * fact(n))
}

/// Names of the sequences with printed closed forms.
pub const ORACLE_NAMES: [&str; 10] =
    ["130", "34", "145", "155", "165", "214", "227", "228", "232", "D*j"];

/// Exact coefficients A_0 ... A_n of the named sequence.
pub fn sequence_oracle(name: &str, n_max: usize) -> Result<Vec<Rat>> {
    let n_max = n_max as i64;
    let seq: Vec<Rat> = match name {
        // six-part squared multinomials
        "130" => multinomial_square_sums(6, n_max).into_iter().map(Rat::from_bigint).collect(),
        // five-part squared multinomials
        "34" => multinomial_square_sums(5, n_max).into_iter().map(Rat::from_bigint).collect(),
        "145" => (0..=n_max)
            .map(|n| {
                let mut s = Rat::zero();
                for k in 0..=n {
                    let sign = if (n + k) % 2 == 0 { 1 } else { -1 };
                    let term = &(&Rat::from_bigint(binom_int(n, k))
                        * &(&binom_rat(&Rat::frac(-1, 3), k) * &binom_rat(&Rat::frac(-2, 3), k)))
                        / &Rat::from_bigint(binom_int(n + k, n));
                    s = &s + &signed(term, sign);
                }
                let pre = Rat::from_int(27).pow(n)
                    * Rat::from_bigint(&binom_int(2 * n, n) * &binom_int(2 * n, n))
                    * Rat::from_bigint(binom_int(3 * n, n));
                &pre * &s
            })
            .collect(),
        "155" => (0..=n_max)
            .map(|n| {
                let mut s = Rat::zero();
                for k in 0..=n {
                    let sign = if (n + k) % 2 == 0 { 1 } else { -1 };
                    let term = &(&Rat::from_bigint(binom_int(n, k))
                        * &(&binom_rat(&Rat::frac(-1, 4), k) * &binom_rat(&Rat::frac(-3, 4), k)))
                        / &Rat::from_bigint(binom_int(n + k, n));
                    s = &s + &signed(term, sign);
                }
                let pre = Rat::from_int(64).pow(n)
                    * Rat::from_bigint(&binom_int(2 * n, n) * &binom_int(2 * n, n))
                    * Rat::from_bigint(binom_int(4 * n, 2 * n));
                &pre * &s
            })
            .collect(),
        "165" => (0..=n_max)
            .map(|n| {
                let mut s = Rat::zero();
                for k in 0..=n {
                    let sign = if (n + k) % 2 == 0 { 1 } else { -1 };
                    let term = &Rat::from_bigint(&binom_int(n, k) * &binom_int(3 * k, n))
                        * &(&binom_rat(&Rat::frac(-1, 3), k) * &binom_rat(&Rat::frac(-2, 3), k));
                    s = &s + &signed(term, sign);
                }
                &(&Rat::from_int(27).pow(n) * &Rat::from_bigint(binom_int(2 * n, n))) * &s
            })
            .collect(),
        "214" => (0..=n_max)
            .map(|n| {
                let mut s = Rat::zero();
                for i in 0..=n {
                    for j in 0..=n {
                        let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                        let c = binom_int(i + j, j);
                        let term = Rat::from_bigint(
                            &(&binom_int(n, i) * &binom_int(n, j)) * &(&(&c * &c) * &c),
                        );
                        s = &s + &signed(term, sign);
                    }
                }
                &Rat::from_bigint(binom_int(2 * n, n)) * &s
            })
            .collect(),
        // printed with (-1)^k; the (-1)^{n+k} reading is forced by the
        // operator (catalog note)
        "227" => (0..=n_max)
            .map(|n| {
                let mut s = Rat::zero();
                for k in 0..=n {
                    let sign = if (n + k) % 2 == 0 { 1 } else { -1 };
                    let term = &Rat::from_bigint(&binom_int(n, k) * &binom_int(3 * k, n))
                        * &(&binom_rat(&Rat::frac(-1, 6), k) * &binom_rat(&Rat::frac(-5, 6), k));
                    s = &s + &signed(term, sign);
                }
                &(&Rat::from_int(432).pow(n) * &Rat::from_bigint(binom_int(2 * n, n))) * &s
            })
            .collect(),
        "228" => (0..=n_max)
            .map(|n| {
                let mut s = Rat::zero();
                for k in 0..=n {
                    let sign = if (n + k) % 2 == 0 { 1 } else { -1 };
                    let term = &Rat::from_bigint(&binom_int(n, k) * &binom_int(3 * k, n))
                        * &(&binom_rat(&Rat::frac(-1, 4), k) * &binom_rat(&Rat::frac(-3, 4), k));
                    s = &s + &signed(term, sign);
                }
                &(&Rat::from_int(64).pow(n) * &Rat::from_bigint(binom_int(2 * n, n))) * &s
            })
            .collect(),
        "232" => (0..=n_max)
            .map(|n| {
                let mut s = BigInt::zero();
                for k in 0..=n {
                    let b = binom_int(n, k);
                    s += &b * &b * &binom_int(3 * n, n + k);
                }
                let c = binom_int(2 * n, n);
                Rat::from_bigint(&(&c * &c) * &s)
            })
            .collect(),
        // Hadamard product of the sextic-ratio sequence with the (j)
        // solution 432^n sum (-1)^k C(-5/6,k) C(-1/6,n-k)^2.
        "D*j" => (0..=n_max)
            .map(|n| {
                let mut s = Rat::zero();
                for k in 0..=n {
                    let c16 = binom_rat(&Rat::frac(-1, 6), n - k);
                    let term = &binom_rat(&Rat::frac(-5, 6), k) * &(&c16 * &c16);
                    s = &s + &signed(term, if k % 2 == 0 { 1 } else { -1 });
                }
                let j_coeff = &Rat::from_int(432).pow(n) * &s;
                &Rat::from_bigint(sextic_factorial_ratio(n)) * &j_coeff
            })
            .collect(),
        _ => {
            return Err(Error::NotFound {
                id: name.to_string(),
                near: ORACLE_NAMES.iter().map(|s| s.to_string()).collect(),
            })
        }
    };
    Ok(seq)
}

fn signed(term: Rat, sign: i64) -> Rat {
    if sign < 0 {
        -term
    } else {
        term
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_terms_match_hand_counts() {
        assert_eq!(sequence_oracle("130", 1).unwrap(), vec![Rat::one(), Rat::from_int(6)]);
        assert_eq!(sequence_oracle("34", 1).unwrap(), vec![Rat::one(), Rat::from_int(5)]);
        assert_eq!(sequence_oracle("232", 1).unwrap(), vec![Rat::one(), Rat::from_int(24)]);
    }

    #[test]
    fn degree_three_first_terms() {
        assert_eq!(sequence_oracle("145", 1).unwrap()[1], Rat::from_int(-288));
        assert_eq!(sequence_oracle("155", 1).unwrap()[1], Rat::from_int(-1392));
        assert_eq!(sequence_oracle("165", 1).unwrap()[1], Rat::from_int(36));
        assert_eq!(sequence_oracle("214", 1).unwrap()[1], Rat::from_int(14));
        assert_eq!(sequence_oracle("227", 1).unwrap()[1], Rat::from_int(360));
        assert_eq!(sequence_oracle("228", 1).unwrap()[1], Rat::from_int(72));
    }

    #[test]
    fn product_sequence_first_term() {
        // D: 60, (j): 372 at n = 1
        assert_eq!(sequence_oracle("D*j", 1).unwrap()[1], Rat::from_int(60 * 372));
    }

    #[test]
    fn unknown_name() {
        assert!(sequence_oracle("999", 3).is_err());
    }

    #[test]
    fn integer_sequences_are_integral() {
        for name in ORACLE_NAMES {
            let seq = sequence_oracle(name, 6).unwrap();
            for (n, v) in seq.iter().enumerate() {
                assert!(v.is_integer(), "{} term {} = {}", name, n, v);
            }
        }
    }
}
