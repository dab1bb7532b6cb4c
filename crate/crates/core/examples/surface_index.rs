//! The doubled relative index, cutting, and the torus graph identity.
use std::collections::BTreeSet;

use arborescent::surface_index::{cut_along, cut_copies, fat_graph_index_sum, index, FatGraph, PatchLabel, SurfacePiece};

fn main() -> arborescent::Result<()> {
    let q: BTreeSet<PatchLabel> = ["Q".into()].into();
    let annulus = SurfacePiece::new(0).with_arcs("Q", 2);
    let qp = PatchLabel::new("D");
    let cut = cut_along(&annulus, &qp, 1, 0);
    let (d1, d2) = cut_copies(&qp);
    let enlarged: BTreeSet<PatchLabel> = [PatchLabel::new("Q"), d1, d2].into();
    println!("annulus meeting Q in 2 arcs: 2i = {}", index(&annulus, &q));
    println!("after cutting along one arc:  2i = {} (chi = {})", index(&cut, &enlarged), cut.euler_char);

    // One vertex on the torus with both edges loops: a single square face with two U corners.
    let g = FatGraph {
        vertex_count: 1,
        arc_edges: vec![(0, 0), (0, 0)],
        circle_edge_count: 0,
        faces: vec![SurfacePiece::new(1).with_arcs(FatGraph::u_patch(), 2)],
    };
    println!("one-vertex torus graph: sum of 2i over faces = {}", fat_graph_index_sum(&g)?);
    let bad = FatGraph { arc_edges: vec![(0, 0)], ..g };
    println!("dropping an edge: {}", fat_graph_index_sum(&bad).unwrap_err());
    Ok(())
}
