use cutfem_core::geometry::*;

fn main() {
    let rep = rectangle(Point2::new(-10.0, -10.0), Point2::new(0.3, 10.0), RectSides::NONE).unwrap();
    let cell = vec![
        Point2::new(0.0, 0.0),
        Point2::new(1.0, 0.0),
        Point2::new(1.0, 1.0),
        Point2::new(0.0, 1.0),
    ];
    let region = clip_cell(&rep, &cell).unwrap();
    println!("loops: {}", region.loops.len());
    for lp in &region.loops {
        println!("  area {}", lp.signed_area());
        for (a, b, k) in lp.edges() {
            println!("  ({:.4},{:.4}) -> ({:.4},{:.4}) {:?}", a.x, a.y, b.x, b.y, k);
        }
    }
    println!("total area: {}", region.area());
}
