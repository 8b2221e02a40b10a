//! Strict centres of the blocks of a covering need not be strict centres of
//! the whole family: the faces of the octahedron.

use ekr_core::covering::octahedron_remark_case;

fn main() {
    let c = octahedron_remark_case();
    println!("faces: {:?}", c.faces.to_lists());
    println!(
        "opposite pairs form a {}-covering",
        c.partition.q().unwrap()
    );
    println!("|F_x| = {:?}", c.star_sizes);
    println!(
        "every vertex a strict centre of every pair: {}",
        c.strict_centre_of_blocks
    );
    println!(
        "max intersecting {}, max anomalous {:?}",
        c.max_intersecting, c.max_anomalous
    );
    println!(
        "faces sharing two vertices with {:?}: {:?}",
        c.faces.members()[0],
        c.two_of_a_face.to_lists()
    );
    println!(
        "every vertex a strict centre of all faces: {}",
        c.strict_centre_of_faces
    );
}
