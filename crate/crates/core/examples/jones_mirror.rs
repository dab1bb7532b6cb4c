//! Jones polynomials of the catalog knots; K3 is the mirror of K1.
use arborescent::classifier::{build_catalog, KnotId};
use arborescent::diagram::{jones, OrientedDiagram};

fn main() -> arborescent::Result<()> {
    let mut polys = Vec::new();
    for e in build_catalog() {
        let od = OrientedDiagram::from_pd(e.pd)?;
        let v = jones(&od)?;
        println!("{}: {} crossings, writhe {}, V = {}", e.id, od.pd().crossing_count(), od.writhe(), v.display("t"));
        polys.push((e.id, v));
    }
    let get = |id| polys.iter().find(|(k, _)| *k == id).map(|(_, v)| v).unwrap();
    println!("V(K3)(t) == V(K1)(1/t): {}", *get(KnotId::K3) == get(KnotId::K1).invert_variable());
    Ok(())
}
