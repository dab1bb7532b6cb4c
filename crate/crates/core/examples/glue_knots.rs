//! Glue two Montesinos tangles along all eight boundary maps and keep the knots.
use arborescent::classifier::catalog_side;
use arborescent::tangle::{compile, enumerate_gluings, glue, knot_filter, standard_eta};

fn main() {
    let (t1, t2) = (catalog_side(1), catalog_side(-1));
    let (p1, p2) = (compile(&t1).string_pairing, compile(&t2).string_pairing);
    println!("left  {t1}: strings {p1}");
    println!("right {t2}: strings {p2}");
    for g in enumerate_gluings() {
        let pd = glue(&t1, &t2, &g);
        let comps = pd.trace_components().expect("glued diagrams are well formed").count;
        let mark = if g == standard_eta() { " (standard)" } else { "" };
        println!("{g}{mark}: {} crossings, {comps} component(s), filter says knot: {}", pd.crossing_count(), knot_filter(&g, &p1, &p2));
    }
}
