use std::process;

fn main() {
    process::exit(dioph::cli::run(std::env::args_os()));
}
