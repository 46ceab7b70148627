// Placeholder main; replaced by the full CLI once the session layer lands.
int main() { return 0; }
