import java.util.ArrayList;
import java.util.Random;

public class Shapes15 {
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

  public static String reverse(String text) {
    StringBuilder sb = new StringBuilder();
    for (int idx = text.length() - 1; idx >= 0; idx--) {
      sb.append(text.charAt(idx));
    }
    return sb.toString();
  }

  static void countdown(int remaining) {
    do {
      System.out.println(remaining);
      remaining--;
      } while (remaining > 0);
      System.out.println("Go!");
    }

  static int[] randomFill(int size) {
    Random rand = new Random(42);
    int[] data = new int[size];
    for (int idx = 0; idx < size; idx++) {
      data[idx] = rand.nextInt(100);
    }
    return data;
  }

  public static long factorial(int n) {
    if (n <= 1) {
      return 1;
    }
    return n * factorial(n - 1);
  }

  public static int parseOrZero(String text) {
    try {
      return Integer.parseInt(text.trim());
    } catch (NumberFormatException e) {
      System.out.println("Not a number: " + e.getMessage());
      return 0;
    }
  }

  static double raise(double x, int n) {
    double result = 1;
    for (int idx = 0; idx < n; idx++) {
      result *= x;
    }
    return result;
  }

  static ArrayList<Integer> collectEven(int[] data) {
    ArrayList<Integer> result = new ArrayList<>();
    for (int v : data) {
      if (v % 2 == 0) {
        result.add(v);
      }
    }
    return result;
  }

  static int fib(int n) {
    int a = 0;
    int b = 1;
    for (int idx = 0; idx < n; idx++) {
      int next = a + b;
      a = b;
      b = next;
    }
    return a;
  }

  static int vowels(String text) {
    int c = 0;
    for (int idx = 0; idx < text.length(); idx++) {
      char ch = Character.toLowerCase(text.charAt(idx));
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

  public static int search(int[] data, int key) {
    for (int idx = 0; idx < data.length; idx++) {
      if (data[idx] == key) {
        return idx;
      }
    }
    return -1;
  }

  public static void main(String[] args) {
    int[] numbers = {3, 4, 1, 7, 4, 3, 6};
    Point p = new Point(2, 4);
    System.out.println(p.distance());
    String rev = reverse("stressed");
    System.out.println(rev);
    countdown(3);
    int[] random = randomFill(3);
    System.out.println(random.length);
    System.out.println(factorial(3));
    int parsed = parseOrZero("abc");
    System.out.println(parsed);
    System.out.println(raise(2, 8));
    ArrayList<Integer> even = collectEven(numbers);
    System.out.println(even.size() + " even numbers");
    System.out.println("Fib: " + fib(7));
    System.out.println(vowels("banana"));
    int pos = search(numbers, 4);
    System.out.println("Found at " + pos);
  }
}
