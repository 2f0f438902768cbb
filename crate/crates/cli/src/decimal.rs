//! Deterministic decimal rendering of exact integer ratios.

/// Renders `num/den` as a plain decimal with `sig` significant digits.
///
/// Pure integer long division: the digit after the last significant one
/// decides rounding (>= 5 rounds away from zero), trailing fraction zeros
/// are stripped, and equal inputs always produce identical bytes.
pub fn decimal(num: i128, den: i128, sig: usize) -> String {
    assert!(sig > 0);
    if num == 0 || den == 0 {
        return "0".into();
    }
    let negative = (num < 0) != (den < 0);
    let mut a = num.unsigned_abs();
    let mut b = den.unsigned_abs();
    let g = gcd(a, b);
    a /= g;
    b /= g;
    if b > u128::MAX / 10 {
        // Long division would overflow; out of the ranges this crate emits.
        return format!("{:.6e}", num as f64 / den as f64);
    }

    let q = a / b;
    let mut rem = a % b;
    let mut digits: Vec<u8> = Vec::new();
    let mut exp: i64;
    if q > 0 {
        let qs = q.to_string();
        exp = qs.len() as i64 - 1;
        digits.extend(qs.bytes().map(|c| c - b'0'));
    } else {
        exp = 0;
        loop {
            rem *= 10;
            let d = (rem / b) as u8;
            rem %= b;
            exp -= 1;
            if d != 0 {
                digits.push(d);
                break;
            }
        }
    }
    while digits.len() <= sig && rem != 0 {
        rem *= 10;
        digits.push((rem / b) as u8);
        rem %= b;
    }
    if digits.len() > sig {
        let round_up = digits[sig] >= 5;
        digits.truncate(sig);
        if round_up {
            let mut i = digits.len();
            loop {
                if i == 0 {
                    digits.insert(0, 1);
                    exp += 1;
                    break;
                }
                i -= 1;
                if digits[i] == 9 {
                    digits[i] = 0;
                } else {
                    digits[i] += 1;
                    break;
                }
            }
        }
    }
    while digits.len() > 1 && *digits.last().unwrap() == 0 && digits.len() as i64 - 1 > exp {
        digits.pop();
    }

    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if exp >= 0 {
        let int_len = exp as usize + 1;
        for i in 0..int_len {
            out.push((b'0' + digits.get(i).copied().unwrap_or(0)) as char);
        }
        if digits.len() > int_len {
            out.push('.');
            for &d in &digits[int_len..] {
                out.push((b'0' + d) as char);
            }
        }
    } else {
        out.push_str("0.");
        for _ in 0..(-exp as usize - 1) {
            out.push('0');
        }
        for &d in &digits {
            out.push((b'0' + d) as char);
        }
    }
    out
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}
