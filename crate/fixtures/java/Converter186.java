/**
 * Converter186 program.
 */
public class Converter186 {
  static void launch(int n) {
    do {
      System.out.println(n);
      n--;
      } while (n > 0);
      System.out.println("Go!");
    }

  public static void main(String[] args) {
    launch(5);
  }
}
