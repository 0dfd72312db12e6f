import java.util.Arrays;

public class Primes156 {
  static final int LIMIT = 12;

  public static void pattern(int rows) {
    for (int row = 1; row <= rows; row++) {
      for (int col = 0; col < row; col++) {
        System.out.print("*");
      }
      System.out.println();
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

  public static double mean(int[] nums) {
    double sum = 0;
    for (int v : nums) {
      sum = sum + v;
    }
    return sum / nums.length;
  }

  public static int totalOf(int[] nums) {
    int sum = 0;
    for (int j = 0; j < nums.length; j++) {
      sum += nums[j];
    }
    return sum;
  }

  public static String reversed(String input) {
    StringBuilder builder = new StringBuilder();
    for (int j = input.length() - 1; j >= 0; j--) {
      builder.append(input.charAt(j));
    }
    return builder.toString();
  }

  static void sort(int[] nums) {
    for (int j = 0; j < nums.length - 1; j++) {
      for (int m = 0; m < nums.length - 1 - j; m++) {
        if (nums[m] > nums[m + 1]) {
          int temp = nums[m];
          nums[m] = nums[m + 1];
          nums[m + 1] = temp;
        }
      }
    }
  }

  public static int sumDigits(int x) {
    int sum = 0;
    while (x > 0) {
      sum += x % 10;
      x /= 10;
    }
    return sum;
  }

  public static double bodyMassIndex(double wgt, double hgt) {
    double value = wgt / Math.pow(hgt, 2);
    return Math.round(value * 10) / 10.0;
  }

  public static double convert(double degrees) {
    return degrees * 9 / 5 + 32;
  }

  static boolean even(int x) {
    return x % 2 == 0;
  }

  public static void main(String[] args) {
    int[] numbers = {8, 1, 6, 8, 4, 6, 9};
    for (int i = 0; i < LIMIT; i += 10) {
      System.out.println("Step " + i);
    }
    pattern(5);
    System.out.println("GCD: " + gcd(18, 39));
    double avg = mean(numbers);
    System.out.println("Average: " + avg);
    System.out.println("Sum: " + totalOf(numbers));
    String rev = reversed("level");
    System.out.println(rev);
    sort(numbers);
    System.out.println(Arrays.toString(numbers));
    System.out.println("Digits: " + sumDigits(89237));
    System.out.println("BMI: " + bodyMassIndex(58.5, 1.77));
    System.out.println(convert(34.0));
    if (even(27)) {
      System.out.println("even");
    } else {
      System.out.println("odd");
    }
  }
}
