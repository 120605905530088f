//! Motzkin and Fibonacci numbers and small closed forms.

use super::Count;

/// `M_n` with `M_k = 0` for `k < 0`, from
/// `M_{n+1} = M_n + Σ_{i=0}^{n-1} M_i M_{n-1-i}`.
pub fn motzkin<T: Count>(n: i64) -> T {
    if n < 0 {
        return T::zero();
    }
    motzkin_numbers::<T>(n as usize + 1).pop().expect("nonempty")
}

/// `[M_0, …, M_{len-1}]`.
pub fn motzkin_numbers<T: Count>(len: usize) -> Vec<T> {
    let mut m: Vec<T> = Vec::with_capacity(len);
    for k in 0..len {
        if k == 0 {
            m.push(T::one());
            continue;
        }
        let n = k - 1;
        let mut next = m[n].clone();
        for i in 0..n {
            next = next + m[i].clone() * m[n - 1 - i].clone();
        }
        m.push(next);
    }
    m
}

/// `F_k` with `F_1 = F_2 = 1`, `F_0 = 0` and `F_k = 0` for `k < 0`.
pub fn fibonacci<T: Count>(k: i64) -> T {
    if k <= 0 {
        return T::zero();
    }
    let (mut a, mut b) = (T::zero(), T::one());
    for _ in 1..k {
        let c = a + b.clone();
        a = b;
        b = c;
    }
    b
}

pub fn power_of_two<T: Count>(e: u32) -> T {
    let two = T::one() + T::one();
    (0..e).fold(T::one(), |acc, _| acc * two.clone())
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    #[test]
    fn motzkin_values() {
        assert_eq!(motzkin::<u64>(0), 1);
        assert_eq!(motzkin::<u64>(4), 9);
        assert_eq!(motzkin::<u64>(5), 21);
        assert_eq!(motzkin::<i64>(-1), 0);
        assert_eq!(motzkin_numbers::<u64>(8), vec![1, 1, 2, 4, 9, 21, 51, 127]);
    }

    #[test]
    fn motzkin_matches_path_count() {
        use crate::bijections::MotzkinWord;
        for n in 0..=10 {
            assert_eq!(motzkin::<u64>(n as i64), MotzkinWord::all(n).len() as u64);
        }
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fibonacci::<u64>(1), 1);
        assert_eq!(fibonacci::<u64>(2), 1);
        assert_eq!(fibonacci::<u64>(5), 5);
        assert_eq!(fibonacci::<u64>(7), 13);
        assert_eq!(fibonacci::<u64>(0), 0);
    }

    #[test]
    fn scalar_types_agree() {
        for n in 0..30 {
            let small: u128 = motzkin(n);
            let big: BigInt = motzkin(n);
            assert_eq!(BigInt::from(small), big);
        }
        let big: BigInt = motzkin(200);
        assert!(big > BigInt::from(u128::MAX));
        assert_eq!(power_of_two::<u64>(10), 1024);
    }
}
