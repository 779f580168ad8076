//! Exact rationals used for inner products, lengths and formula evaluation.

use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Rational = Ratio<i64>;

/// Renders integers plainly and everything else as `p/q` in lowest terms.
pub fn render(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses the output of [`render`].
pub fn parse(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let q: i64 = q.trim().parse().ok()?;
            if q == 0 {
                return None;
            }
            Some(Ratio::new(p.trim().parse().ok()?, q))
        }
        None => Some(Ratio::from_integer(text.parse().ok()?)),
    }
}

pub fn int(n: i64) -> Rational {
    Ratio::from_integer(n)
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_lowest_terms() {
        assert_eq!(render(&Ratio::new(4, 2)), "2");
        assert_eq!(render(&Ratio::new(-2, 4)), "-1/2");
        assert_eq!(render(&Ratio::new(2, 3)), "2/3");
    }

    #[test]
    fn parse_inverts_render() {
        for q in [Ratio::new(1, 2), int(-7), Ratio::new(-2, 3), zero()] {
            assert_eq!(parse(&render(&q)), Some(q));
        }
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
    }
}
