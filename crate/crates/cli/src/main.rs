//! `gmc`: parse, grade-check, normalize, and verify graded monoidal
//! category artifacts from the command line.

mod commands;
mod elaborate;
mod source;

use commands::{run, Args, USAGE};

fn main() {
    let raw: Vec<String> = std::env::args().skip(1).collect();
    let Some((cmd, rest)) = raw.split_first() else {
        print!("{USAGE}");
        std::process::exit(2);
    };
    let args = Args::parse(rest);
    std::process::exit(run(cmd, &args));
}
