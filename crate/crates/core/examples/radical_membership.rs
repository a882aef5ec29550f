//! Ideal membership versus radical membership on a small system.

use hellyspace::cli::parse_system;
use hellyspace::groebner::{buchberger, ideal_member, radical_member};

fn main() -> hellyspace::Result<()> {
    let parsed = parse_system("x0^2\nx0*x1 - x1^2\n")?;
    let f = parsed.system;
    let ord = f.order();
    let gb = buchberger(&f, ord);
    println!("reduced Groebner basis:");
    for g in gb.generators() {
        println!("  {g}");
    }
    let queries = parse_system("x0\nx1^3\nx0^2*x1 + x1^2\nx1\nx0 + 1\n")?.system;
    for h in &queries {
        println!(
            "{:>16}   in ideal: {:5}   in radical: {}",
            h.to_string(),
            ideal_member(h, &f, ord),
            radical_member(h, &f, ord)
        );
    }
    Ok(())
}
