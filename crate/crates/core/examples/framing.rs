//! Disk weights, framings and boundary slopes for one side at a time.
use arborescent::framing::{
    boundary_slope, rotation_correction, solve_weights, theta_montesinos, theta_twisted_side, train_track_type,
    twist_correction, FramingContext,
};

fn main() -> arborescent::Result<()> {
    let n = 4;
    for s in 0..=n / 2 {
        let w = solve_weights(n, s)?;
        let ctx = FramingContext::new(n, s, 1, 1)?;
        println!(
            "n={n} s={s}: weights {:?}, track {}, theta = {} + {} + {} = {}",
            w.0,
            train_track_type(n / 2, s)?,
            theta_montesinos(n, s, 1)?,
            twist_correction(n, 1),
            rotation_correction(n),
            theta_twisted_side(&ctx),
        );
    }
    let plus = theta_twisted_side(&FramingContext::new(4, 1, 1, 1)?);
    let minus = theta_twisted_side(&FramingContext::new(4, 1, 1, -1)?);
    for (name, a, b) in [("K1", plus, plus), ("K2", plus, minus), ("K3", minus, minus)] {
        println!("{name}: theta {a} + {b} over n = 4 gives slope {}", boundary_slope(a, b, 4)?);
    }
    Ok(())
}
