//! Parse, print and evaluate ring expressions, including error reporting.
//!
//!     cargo run --example expressions -- "TE(Z/3) x Z/2"

use finring::expr::{evaluate, parse};
use finring::Limits;

fn main() {
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = [
            "Z/4 x Z/3",
            "M(2,GF(4))",
            "NIL(Z/2, 3)",
            "POLYQ(Z/3, [1, 0, 1])",
            "QUOT(Z/12, [4])",
            "MODJ(UT(2, Z/4))",
            "GR(Z/2, S3)",
            "M(3, Z/4)",
            "GF(6)",
            "UT(2, Z/",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
    }
    let limits = Limits::default();
    for text in &inputs {
        match parse(text) {
            Err(e) => {
                println!("{text}");
                println!("{}^ {e}", " ".repeat(e.offset));
            }
            Ok(ast) => match evaluate(&ast, &limits) {
                Ok(r) => println!("{text}  =>  {ast}  order {}", r.order()),
                Err(e) => println!("{text}  =>  {ast}  {e}"),
            },
        }
    }
}
