// Practice problem
import java.util.Arrays;

public class Recursion79 {
  public static double toFahrenheit(double celsius) {
    return celsius * 9 / 5 + 32;
  }

  static void countdown(int remaining) {
    do {
      System.out.println(remaining);
      remaining--;
      } while (remaining > 0);
      System.out.println("Go!");
    }

  static void sortArray(int[] scores) {
    for (int idx = 0; idx < scores.length - 1; idx++) {
      for (int m = 0; m < scores.length - 1 - idx; m++) {
        if (scores[m] > scores[m + 1]) {
          int tmp = scores[m];
          scores[m] = scores[m + 1];
          scores[m + 1] = tmp;
        }
      }
    }
  }

  static int findMax(int[] scores) {
    int max = scores[0];
    for (int idx = 1; idx < scores.length; idx++) {
      if (scores[idx] > max) {
        max = scores[idx];
      }
    }
    return max;
  }

  public static void main(String[] args) {
    int[] numbers = {9, 2, 8, 7};
    System.out.println(toFahrenheit(3.0));
    countdown(4);
    sortArray(numbers);
    System.out.println(Arrays.toString(numbers));
    int top = findMax(numbers);
    System.out.println("Max is " + top);
  }
}
