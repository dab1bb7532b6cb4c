//! Rational tangles from continued fractions, and the parity of their closures.
use arborescent::tangle::rational_tangle;
use arborescent::{continued_fraction, Slope};

fn main() -> arborescent::Result<()> {
    for (p, q) in [(0, 1), (1, 2), (1, 3), (2, 5), (-3, 7), (5, 8)] {
        let s = Slope::new(p, q)?;
        let t = rational_tangle(s);
        println!(
            "T({s}): continued fraction {:?}, {} crossings, strings {}, numerator closure {} component(s), denominator closure {}",
            continued_fraction(s)?,
            t.crossing_count(),
            t.string_pairing,
            t.numerator_closure().components().count,
            t.denominator_closure().components().count,
        );
    }
    Ok(())
}
