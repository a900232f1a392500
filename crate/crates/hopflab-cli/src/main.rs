fn main() {
    println!("hopflab");
}
