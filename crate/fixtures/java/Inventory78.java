// Lab assignment
import java.util.Random;

/**
 * Inventory78 program.
 */
public class Inventory78 {
  static class Point {
    int x;
    int y;
    Point(int x, int y) {
      this.x = x;
      this.y = y;
    }
    double distance() {
      return Math.sqrt(x * x + y * y);
    }
  }

  static int gcd(int a, int b) {
    while (b != 0) {
      int t = b;
      b = a % b;
      a = t;
    }
    return a;
  }

  static int[] fillRandom(int size) {
    Random rand = new Random(42);
    int[] data = new int[size];
    for (int j = 0; j < size; j++) {
      data[j] = rand.nextInt(100);
    }
    return data;
  }

  public static int find(int[] data, int target) {
    for (int j = 0; j < data.length; j++) {
      if (data[j] == target) {
        return j;
      }
    }
    return -1;
  }

  static int countVowels(String word) {
    int c = 0;
    for (int j = 0; j < word.length(); j++) {
      char ch = Character.toLowerCase(word.charAt(j));
      switch (ch) {
        case 'a':
        case 'e':
        case 'i':
        case 'o':
        case 'u':
        c++;
        break;
        default:
        break;
      }
    }
    return c;
  }

  public static void main(String[] args) {
    int[] numbers = {3, 3, 9, 6, 9, 4, 9};
    Point p = new Point(5, 7);
    System.out.println(p.distance());
    System.out.println("GCD: " + gcd(33, 24));
    int[] random = fillRandom(8);
    System.out.println(random.length);
    int pos = find(numbers, 8);
    System.out.println("Found at " + pos);
    System.out.println(countVowels("programming"));
  }
}
