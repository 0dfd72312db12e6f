// Exercise
import java.util.ArrayList;
import java.util.Random;

public class Loops10 {
  static final int LIMIT = 73;

  public static boolean isPalindrome(String line) {
    int left = 0;
    int right = line.length() - 1;
    while (left < right) {
      if (line.charAt(left) != line.charAt(right)) {
        return false;
      }
      left++;
      right--;
    }
    return true;
  }

  static int maxValue(int[] values) {
    int max = values[0];
    for (int i = 1; i < values.length; i++) {
      if (values[i] > max) {
        max = values[i];
      }
    }
    return max;
  }

  public static int digitSum(int n) {
    int acc = 0;
    while (n > 0) {
      acc += n % 10;
      n /= 10;
    }
    return acc;
  }

  static int[] fillRandom(int size) {
    Random rand = new Random(42);
    int[] values = new int[size];
    for (int i = 0; i < size; i++) {
      values[i] = rand.nextInt(100);
    }
    return values;
  }

  static double raise(double x, int n) {
    double result = 1;
    for (int i = 0; i < n; i++) {
      result *= x;
    }
    return result;
  }

  public static int parseOrZero(String line) {
    try {
      return Integer.parseInt(line.trim());
    } catch (NumberFormatException e) {
      System.out.println("Not a number: " + e.getMessage());
      return 0;
    }
  }

  static ArrayList<Integer> filterEven(int[] values) {
    ArrayList<Integer> items = new ArrayList<>();
    for (int v : values) {
      if (v % 2 == 0) {
        items.add(v);
      }
    }
    return items;
  }

  public static double convert(double c) {
    return c * 9 / 5 + 32;
  }

  static boolean isPrime(int n) {
    if (n < 2) {
      return false;
    }
    int factor = 2;
    while (factor * factor <= n) {
      if (n % factor == 0) {
        return false;
      }
      factor++;
    }
    return true;
  }

  public static void main(String[] args) {
    int[] numbers = {1, 1, 7, 8};
    for (int i = 0; i < LIMIT; i += 10) {
      System.out.println("Step " + i);
    }
    System.out.println(isPalindrome("hello"));
    int top = maxValue(numbers);
    System.out.println("Max is " + top);
    System.out.println("Digits: " + digitSum(4800));
    int[] random = fillRandom(6);
    System.out.println(random.length);
    System.out.println(raise(2, 2));
    int parsed = parseOrZero(" 7 ");
    System.out.println(parsed);
    ArrayList<Integer> even = filterEven(numbers);
    System.out.println(even.size() + " even numbers");
    System.out.println(convert(11.0));
    for (int q = 2; q < 10; q++) {
      if (isPrime(q)) {
        System.out.print(q + " ");
      }
    }
    System.out.println();
  }
}
