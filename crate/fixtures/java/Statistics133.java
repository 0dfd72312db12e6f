// Practice problem
import java.util.Arrays;

/**
 * Statistics133 program.
 */
public class Statistics133 {
  public static String reverse(String text) {
    StringBuilder out = new StringBuilder();
    for (int j = text.length() - 1; j >= 0; j--) {
      out.append(text.charAt(j));
    }
    return out.toString();
  }

  static int maxValue(int[] values) {
    int max = values[0];
    for (int j = 1; j < values.length; j++) {
      if (values[j] > max) {
        max = values[j];
      }
    }
    return max;
  }

  static boolean isPrime(int x) {
    if (x < 2) {
      return false;
    }
    int factor = 2;
    while (factor * factor <= x) {
      if (x % factor == 0) {
        return false;
      }
      factor++;
    }
    return true;
  }

  static void sortArray(int[] values) {
    for (int j = 0; j < values.length - 1; j++) {
      for (int m = 0; m < values.length - 1 - j; m++) {
        if (values[m] > values[m + 1]) {
          int tmp = values[m];
          values[m] = values[m + 1];
          values[m + 1] = tmp;
        }
      }
    }
  }

  public static double computeBmi(double kg, double meters) {
    double value = kg / Math.pow(meters, 2);
    return Math.round(value * 10) / 10.0;
  }

  public static double mean(int[] values) {
    double result = 0;
    for (int v : values) {
      result = result + v;
    }
    return result / values.length;
  }

  public static void main(String[] args) {
    int[] numbers = {1, 5, 7, 8, 6, 1};
    String rev = reverse("level");
    System.out.println(rev);
    int top = maxValue(numbers);
    System.out.println("Max is " + top);
    for (int q = 2; q < 12; q++) {
      if (isPrime(q)) {
        System.out.print(q + " ");
      }
    }
    System.out.println();
    sortArray(numbers);
    System.out.println(Arrays.toString(numbers));
    System.out.println("BMI: " + computeBmi(77.5, 1.92));
    double avg = mean(numbers);
    System.out.println("Average: " + avg);
  }
}
