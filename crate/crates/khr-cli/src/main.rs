fn main() {
    let _ = khr_core::probe();
}
