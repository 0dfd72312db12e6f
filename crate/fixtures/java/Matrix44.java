import java.util.Random;

/**
 * Matrix44 program.
 */
public class Matrix44 {
  static int[] randomFill(int size) {
    Random rand = new Random(42);
    int[] data = new int[size];
    for (int k = 0; k < size; k++) {
      data[k] = rand.nextInt(100);
    }
    return data;
  }

  public static void main(String[] args) {
    int[] random = randomFill(8);
    System.out.println(random.length);
  }
}
