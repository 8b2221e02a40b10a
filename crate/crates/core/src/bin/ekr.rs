fn main() -> std::process::ExitCode {
    ekr_core::cli::main()
}
