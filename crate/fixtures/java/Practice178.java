import java.util.Arrays;
import java.util.Scanner;

public class Practice178 {
  static final int LIMIT = 59;

  public static double toFahrenheit(double c) {
    return c * 9 / 5 + 32;
  }

  public static int magnitude(int n) {
    return n < 0 ? -n : n;
  }

  static double power(double x, int n) {
    double result = 1;
    for (int i = 0; i < n; i++) {
      result *= x;
    }
    return result;
  }

  public static void pattern(int height) {
    for (int row = 1; row <= height; row++) {
      for (int col = 0; col < row; col++) {
        System.out.print("*");
      }
      System.out.println();
    }
  }

  public static int toNumber(String text) {
    try {
      return Integer.parseInt(text.trim());
    } catch (NumberFormatException e) {
      System.out.println("Not a number: " + e.getMessage());
      return 0;
    }
  }

  static void bubbleSort(int[] scores) {
    for (int i = 0; i < scores.length - 1; i++) {
      for (int m = 0; m < scores.length - 1 - i; m++) {
        if (scores[m] > scores[m + 1]) {
          int tmp = scores[m];
          scores[m] = scores[m + 1];
          scores[m + 1] = tmp;
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

  public static void main(String[] args) {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    int[] numbers = {4, 4, 1, 3, 8, 5};
    for (int i = 0; i < LIMIT; i += 10) {
      System.out.println("Step " + i);
    }
    System.out.println(toFahrenheit(34.0));
    System.out.println(magnitude(12));
    System.out.println(power(2, 4));
    pattern(5);
    int parsed = toNumber("abc");
    System.out.println(parsed);
    bubbleSort(numbers);
    System.out.println(Arrays.toString(numbers));
    System.out.println(factorial(3));
    sc.close();
  }
}
