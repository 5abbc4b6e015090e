/// `C(n, k)` in exact arithmetic, `None` on overflow of `u128`.
pub fn binomial_checked(n: u128, k: u128) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        let num = n - i;
        let den = i + 1;
        let g = gcd(acc, den);
        let (a, d) = (acc / g, den / g);
        let num = num / d; // d divides num * a / g exactly, and gcd(a, d) = 1
        acc = a.checked_mul(num)?;
    }
    Some(acc)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `C(n, k)` for signed `n`, treating negative or short tops as zero.
pub fn binomial(n: i128, k: i128) -> u128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    binomial_checked(n as u128, k as u128).expect("binomial overflow")
}
