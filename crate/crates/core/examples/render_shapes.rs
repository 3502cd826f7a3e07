//! Text pictures of a plain, a gated and a wicketed diagram.

use umbral_ferrers::oracle::{
    render_ascii, FerrersShape, GateRow, GatedShape, Shape, WicketedShape,
};

fn show(title: &str, shape: &dyn Shape) {
    println!("{title} (half-perimeter {}):", shape.half_perimeter());
    println!("{}\n", render_ascii(shape));
}

fn main() -> umbral_ferrers::Result<()> {
    show("plain", &FerrersShape::new(vec![3, 4, 4, 6, 7, 8])?);
    let gate = vec![
        GateRow::new(1, 1, 2),
        GateRow::new(1, 2, 1),
        GateRow::new(1, 2, 2),
    ];
    show(
        "gated",
        &GatedShape::new(FerrersShape::new(vec![2, 4])?, gate.clone())?,
    );
    show(
        "wicketed",
        &WicketedShape::from_parts(&[2, 4], &gate, &[5, 6])?,
    );
    Ok(())
}
