//! Text formats, instance generators and the command-line driver.

mod bench;
mod command;
mod gen;
mod parse;
mod report;

pub use bench::{bench_csv, bench_scaling, BenchRow, Family};
pub use command::run_command;
pub use gen::{gen_coloring, gen_random, RandomSpec};
pub use parse::{parse_system, parse_system_with_order, serialize_system, ParsedSystem};
pub use report::{input_digest, Rounds, RunReport};
