//! File formats, experiment sweeps and result records for the `grdisc`
//! command-line tool.

pub mod decimal;
pub mod instance_io;
pub mod record;
pub mod sweep;

use num_bigint::BigInt;
use num_traits::One;

use grdisc_core::constructions::Rational;
pub use instance_io::CliError;

/// Parses a density or multiplier given as `a/b`, a decimal like `0.25`, or
/// an integer, into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let bad = |why: &str| CliError::Usage(format!("cannot parse `{s}` as a rational: {why}"));
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let num: BigInt = a.trim().parse().map_err(|_| bad("bad numerator"))?;
        let den: BigInt = b.trim().parse().map_err(|_| bad("bad denominator"))?;
        if den == BigInt::from(0) {
            return Err(bad("zero denominator"));
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let int_part = if int_part.is_empty() { "0" } else { int_part };
        let negative = int_part.starts_with('-');
        let int: BigInt = int_part.parse().map_err(|_| bad("bad integer part"))?;
        if frac_part.is_empty() {
            return Ok(Rational::from_integer(int));
        }
        if !frac_part.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad("bad fraction part"));
        }
        let frac: BigInt = frac_part.parse().map_err(|_| bad("bad fraction part"))?;
        let mut scale = BigInt::one();
        for _ in 0..frac_part.len() {
            scale *= 10;
        }
        let frac_rat = Rational::new(frac, scale);
        let int_rat = Rational::from_integer(int);
        return Ok(if negative { int_rat - frac_rat } else { int_rat + frac_rat });
    }
    let int: BigInt = s.parse().map_err(|_| bad("not a number"))?;
    Ok(Rational::from_integer(int))
}
