import java.util.Arrays;
import java.util.Random;

public class Library43 {
  static int[] fillRandom(int size) {
    Random rand = new Random(42);
    int[] values = new int[size];
    for (int idx = 0; idx < size; idx++) {
      values[idx] = rand.nextInt(100);
    }
    return values;
  }

  static void bubbleSort(int[] values) {
    for (int idx = 0; idx < values.length - 1; idx++) {
      for (int m = 0; m < values.length - 1 - idx; m++) {
        if (values[m] > values[m + 1]) {
          int temp = values[m];
          values[m] = values[m + 1];
          values[m + 1] = temp;
        }
      }
    }
  }

  public static long factorial(int n) {
    if (n <= 1) {
      return 1;
    }
    return n * factorial(n - 1);
  }

  static int fib(int n) {
    int first = 0;
    int second = 1;
    for (int idx = 0; idx < n; idx++) {
      int next = first + second;
      first = second;
      second = next;
    }
    return first;
  }

  static int vowels(String line) {
    int c = 0;
    for (int idx = 0; idx < line.length(); idx++) {
      char ch = Character.toLowerCase(line.charAt(idx));
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

  public static int sumDigits(int n) {
    int total = 0;
    while (n > 0) {
      total += n % 10;
      n /= 10;
    }
    return total;
  }

  public static int sumArray(int[] values) {
    int total = 0;
    for (int idx = 0; idx < values.length; idx++) {
      total += values[idx];
    }
    return total;
  }

  public static String reversed(String line) {
    StringBuilder out = new StringBuilder();
    for (int idx = line.length() - 1; idx >= 0; idx--) {
      out.append(line.charAt(idx));
    }
    return out.toString();
  }

  static void launch(int remaining) {
    do {
      System.out.println(remaining);
      remaining--;
      } while (remaining > 0);
      System.out.println("Go!");
    }

  public static void main(String[] args) {
    int[] numbers = {6, 2, 5, 4, 7};
    int[] random = fillRandom(6);
    System.out.println(random.length);
    bubbleSort(numbers);
    System.out.println(Arrays.toString(numbers));
    System.out.println(factorial(11));
    System.out.println("Fib: " + fib(15));
    System.out.println(vowels("programming"));
    System.out.println("Digits: " + sumDigits(72275));
    System.out.println("Sum: " + sumArray(numbers));
    String rev = reversed("level");
    System.out.println(rev);
    launch(4);
  }
}
