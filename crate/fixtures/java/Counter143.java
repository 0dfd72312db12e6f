public class Counter143 {
  public static void main(String[] args) {
    System.out.println("Hello Java");
  }
}
