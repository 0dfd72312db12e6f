// Lab assignment
import java.util.ArrayList;
import java.util.Random;

public class Homework170 {
  static final int LIMIT = 36;

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

  static boolean checkPrime(int num) {
    if (num < 2) {
      return false;
    }
    int d = 2;
    while (d * d <= num) {
      if (num % d == 0) {
        return false;
      }
      d++;
    }
    return true;
  }

  public static void printTriangle(int height) {
    for (int row = 1; row <= height; row++) {
      for (int col = 0; col < row; col++) {
        System.out.print("*");
      }
      System.out.println();
    }
  }

  static int[] randomFill(int size) {
    Random rand = new Random(42);
    int[] values = new int[size];
    for (int i = 0; i < size; i++) {
      values[i] = rand.nextInt(100);
    }
    return values;
  }

  public static int abs(int num) {
    return num < 0 ? -num : num;
  }

  public static int indexOf(int[] values, int wanted) {
    for (int i = 0; i < values.length; i++) {
      if (values[i] == wanted) {
        return i;
      }
    }
    return -1;
  }

  static int greatestDivisor(int a, int b) {
    while (b != 0) {
      int t = b;
      b = a % b;
      a = t;
    }
    return a;
  }

  public static double celsiusToF(double celsius) {
    return celsius * 9 / 5 + 32;
  }

  static ArrayList<Integer> collectEven(int[] values) {
    ArrayList<Integer> result = new ArrayList<>();
    for (int v : values) {
      if (v % 2 == 0) {
        result.add(v);
      }
    }
    return result;
  }

  static int fibonacci(int num) {
    int prev = 0;
    int curr = 1;
    for (int i = 0; i < num; i++) {
      int next = prev + curr;
      prev = curr;
      curr = next;
    }
    return prev;
  }

  public static void main(String[] args) {
    int[] numbers = {5, 5, 7, 1, 9, 2};
    for (int i = 0; i < LIMIT; i += 10) {
      System.out.println("Step " + i);
    }
    Point p = new Point(9, 5);
    System.out.println(p.distance());
    for (int q = 2; q < 28; q++) {
      if (checkPrime(q)) {
        System.out.print(q + " ");
      }
    }
    System.out.println();
    printTriangle(3);
    int[] random = randomFill(7);
    System.out.println(random.length);
    System.out.println(abs(-25));
    int pos = indexOf(numbers, 4);
    System.out.println("Found at " + pos);
    System.out.println("GCD: " + greatestDivisor(60, 34));
    System.out.println(celsiusToF(28.0));
    ArrayList<Integer> even = collectEven(numbers);
    System.out.println(even.size() + " even numbers");
    System.out.println("Fib: " + fibonacci(11));
  }
}
