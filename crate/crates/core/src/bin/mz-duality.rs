fn main() {
    std::process::exit(mz_duality::cli::main_exit_code());
}
